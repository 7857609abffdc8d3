#include <charconv>
#include <string>
#include <unordered_set>

#include "uclab/error.hpp"
#include "uclab/family.hpp"

namespace uclab {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_number(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec != std::errc{} || ptr != last) {
    parse_fail(line, "expected a positive integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Family parse_family(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<SetBits> members;
  std::unordered_set<SetBits, SetBitsHash> seen;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (!have_header) {
      if (!line.starts_with("n=")) parse_fail(line_no, "expected header 'n=<universe size>'");
      n = parse_number(line.substr(2), line_no);
      if (n == 0) parse_fail(line_no, "universe size must be positive");
      have_header = true;
      continue;
    }
    if (line.empty()) continue;

    SetBits set(n);
    if (line != "-") {
      std::size_t prev = 0;
      while (true) {
        const std::size_t comma = line.find(',');
        const std::size_t x = parse_number(line.substr(0, comma), line_no);
        if (x == 0 || x > n) {
          parse_fail(line_no, "element " + std::to_string(x) + " outside [1, " +
                                  std::to_string(n) + "]");
        }
        if (x <= prev) parse_fail(line_no, "elements must be strictly ascending");
        set.insert(x - 1);
        prev = x;
        if (comma == std::string_view::npos) break;
        line = line.substr(comma + 1);
      }
    }
    if (!seen.insert(set).second) parse_fail(line_no, "duplicate set");
    members.push_back(std::move(set));
  }

  if (!have_header) parse_fail(1, "missing header 'n=<universe size>'");
  if (members.empty()) parse_fail(line_no, "family has no members");
  return Family(n, std::move(members));
}

std::string format_set(const SetBits& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t x : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x + 1);
  }
  return out;
}

std::string serialize_family(const Family& f) {
  std::string out = "n=" + std::to_string(f.universe_n()) + "\n";
  for (const SetBits& s : f) {
    out += format_set(s);
    out += '\n';
  }
  return out;
}

}  // namespace uclab
