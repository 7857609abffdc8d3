#include "oracle_check.hpp"

#include <algorithm>
#include <vector>

#include "uclab/metrics.hpp"

namespace uclab::cli {

namespace {

std::string first_difference(const Family& expected, const Family& actual) {
  if (expected.universe_n() != actual.universe_n()) return "universe sizes differ";
  for (const SetBits& s : expected) {
    if (!actual.contains(s)) return "closure set {" + format_set(s) + "} missing from materialize";
  }
  for (const SetBits& s : actual) {
    if (!expected.contains(s)) return "materialize set {" + format_set(s) + "} not in closure";
  }
  return {};
}

}  // namespace

Family drop_last_member(const Family& f) {
  std::vector<SetBits> members(f.begin(), f.end());
  if (members.size() > 1) members.pop_back();
  return Family(f.universe_n(), std::move(members));
}

CellResult check_cell(const BlockParams& params, std::size_t cap, const FamilyFault& fault) {
  CellResult r;
  r.params = params;
  const CountTable counts = count_table(params);
  r.total = counts.total.get_str();
  if (counts.total > BigInt(static_cast<unsigned long>(cap))) {
    r.status = CellStatus::Skip;
    r.detail = "N > cap";
    return r;
  }
  auto fail = [&](std::string why) {
    r.status = CellStatus::Fail;
    r.detail = std::move(why);
    return r;
  };

  const BlockFamily bf = build_block_family(params);
  Family structured = materialize(bf, cap);
  if (fault) structured = fault(structured);
  const std::vector<SetBits> gens = bf.generators();
  const Family closure = union_closure(gens, params.n(), cap);

  if (auto diff = first_difference(closure, structured); !diff.empty()) return fail(diff);
  if (BigInt(static_cast<unsigned long>(structured.size())) != counts.total) {
    return fail("size " + std::to_string(structured.size()) + " != N " + r.total);
  }

  const BlockMetrics exact = exact_metrics(params);
  const SetBits t = bf.t_union();
  const AbundanceProfile profile = abundance_profile(structured);
  for (std::size_t x = 0; x < params.n(); ++x) {
    const Rational& want = t.contains(x) ? exact.gamma_in : exact.gamma_out;
    if (profile.gamma[x] != want) {
      return fail("gamma of element " + std::to_string(x + 1) + " is " + profile.gamma[x].str() +
                  ", class counting gives " + want.str());
    }
  }
  if (const Rational avg = average_abundance(structured); avg != exact.avg_abundance) {
    return fail("avg_abundance " + avg.str() + " != " + exact.avg_abundance.str());
  }
  for (AodMethod method : {AodMethod::GammaWeighted, AodMethod::Pairwise}) {
    if (const Rational direct = aod(structured, method); direct != exact.aod) {
      return fail(std::string("aod (") +
                  (method == AodMethod::Pairwise ? "pairwise" : "gamma_weighted") + ") " +
                  direct.str() + " != " + exact.aod.str());
    }
  }
  return r;
}

}  // namespace uclab::cli
