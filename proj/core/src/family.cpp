#include "uclab/family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "uclab/error.hpp"

namespace uclab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::NoNonemptySet: return "NoNonemptySet";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::BadM: return "BadM";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::TooFewRecords: return "TooFewRecords";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Family::Family(std::size_t universe_n, std::vector<SetBits> members)
    : n_(universe_n), members_(std::move(members)) {
  if (n_ == 0) throw Error(ErrorKind::PreconditionFailed, "universe size must be positive");
  if (members_.empty()) throw Error(ErrorKind::PreconditionFailed, "family must be nonempty");
  for (const SetBits& s : members_) {
    if (s.universe_n() != n_) {
      throw Error(ErrorKind::PreconditionFailed, "member universe size differs from family");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const SetBits& s) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Family union_closure(std::span<const SetBits> generators, std::size_t universe_n,
                     std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "no generators given");
  for (const SetBits& g : generators) {
    if (g.universe_n() != universe_n) {
      throw Error(ErrorKind::ElementOutOfRange,
                  "generator universe " + std::to_string(g.universe_n()) +
                      " does not match n=" + std::to_string(universe_n));
    }
  }

  std::vector<SetBits> found;
  std::unordered_set<SetBits, SetBitsHash> seen;
  auto discover = [&](SetBits s) {
    if (seen.insert(s).second) {
      if (found.size() == cap) {
        throw Error(ErrorKind::CapExceeded,
                    "closure exceeds cap of " + std::to_string(cap) + " sets");
      }
      found.push_back(std::move(s));
    }
  };
  for (const SetBits& g : generators) discover(g);

  // Invariant: all pairs among found[0..i) have had their union discovered.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      SetBits u = found[i] | found[j];
      if (u != found[i] && u != found[j]) discover(std::move(u));
    }
  }
  return Family(universe_n, std::move(found));
}

bool is_union_closed(const Family& f) {
  const auto members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      // Canonical order puts subsets first, so a union equal to one operand
      // needs no lookup.
      SetBits u = members[i] | members[j];
      if (u == members[j] || u == members[i]) continue;
      if (!f.contains(u)) return false;
    }
  }
  return true;
}

SeparationReport separates_points(const Family& f) {
  const std::size_t n = f.universe_n();
  const std::size_t count = f.size();
  // Column x is the membership pattern of element x across the members; two
  // elements are separated iff their columns differ.
  std::vector<SetBits> columns(n, SetBits(count));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t x : f[a].elements()) columns[x].insert(a);
  }
  SeparationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (columns[i] == columns[j]) report.witness_pairs.emplace_back(i + 1, j + 1);
    }
  }
  report.separates = report.witness_pairs.empty();
  return report;
}

Family augment_cosingletons(const Family& f) {
  const std::size_t n = f.universe_n();
  const SetBits everything = SetBits::full(n);
  if (!f.contains(everything)) {
    throw Error(ErrorKind::PreconditionFailed,
                "[n] is not a member; adding co-singletons would not keep the family union-closed");
  }
  std::vector<SetBits> members(f.begin(), f.end());
  for (std::size_t j = 0; j < n; ++j) {
    SetBits co = everything;
    co.erase(j);
    members.push_back(std::move(co));
  }
  return Family(n, std::move(members));
}

}  // namespace uclab
