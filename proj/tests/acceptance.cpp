// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons of exact quantities are
// exact; tolerances below are the only ones used.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "golden_io.hpp"
#include "test_support.hpp"
#include "uclab/asymptotics.hpp"
#include "uclab/construction.hpp"
#include "uclab/family.hpp"
#include "uclab/metrics.hpp"

namespace {

using namespace uclab;
using Clock = std::chrono::steady_clock;

constexpr double kChainSpread = 4.0;
constexpr double kThetaSpread = 8.0;
constexpr std::size_t kGridCap = 100'000;
constexpr int kRandomFamilies = 100;
constexpr unsigned kRandomFamilyMaxSize = 2'000;
constexpr double kRuntimeLimitGrid = 120.0;
constexpr double kRuntimeLimitRandom = 300.0;
constexpr double kRuntimeLimitSweep = 60.0;
constexpr double kRuntimeLimitSeparation = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string params_str(const BlockParams& p) {
  return "k=" + std::to_string(p.k) + " m=" + std::to_string(p.m) + " s=" + std::to_string(p.s);
}

std::vector<BlockParams> oracle_grid() {
  std::vector<BlockParams> grid;
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t m = 2; m <= 3; ++m) {
      for (std::size_t s = 1; s + 2 <= k; ++s) grid.push_back({k, m, s});
    }
  }
  return grid;
}

// sum_j C(m, j) 2^((m-j)s), straight from the formula
mpz_class count_formula(const BlockParams& p) {
  mpz_class total = 0;
  for (unsigned long j = 1; j <= p.m; ++j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), p.m, j);
    total += c << static_cast<mp_bitcnt_t>((p.m - j) * p.s);
  }
  return total;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const BlockParams& p : oracle_grid()) {
    const mpz_class n_formula = count_formula(p);
    if (n_formula > kGridCap) continue;
    const BlockFamily bf = build_block_family(p);
    const Family structured = materialize(bf, kGridCap);
    const std::vector<SetBits> gens = bf.generators();
    const Family closed = union_closure(gens, p.n(), kGridCap);
    const oracle::MaskFamily brute =
        oracle::closure(oracle::generators(oracle::leading_t(p.k, p.m, p.s)));
    if (structured != closed) o.fail(params_str(p) + ": materialize != union_closure");
    if (uclab::test::to_masks(structured) != brute) o.fail(params_str(p) + ": materialize != brute closure");
    if (mpz_class(static_cast<unsigned long>(structured.size())) != n_formula) {
      o.fail(params_str(p) + ": |F| != formula");
    }
    if (count_table(p).total != n_formula) o.fail(params_str(p) + ": count_table != formula");
  }
  const double secs = seconds_since(t0);
  if (secs > kRuntimeLimitGrid) o.fail("runtime " + std::to_string(secs) + "s");
  if (o.pass) o.detail = "20 cells, " + std::to_string(secs) + "s";
  return o;
}

Outcome form_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const BlockParams& p : oracle_grid()) {
    const Family f = materialize(build_block_family(p), kGridCap);
    if (aod(f, AodMethod::GammaWeighted) != aod(f, AodMethod::Pairwise)) {
      o.fail(params_str(p) + ": AOD forms differ");
    }
  }
  std::mt19937_64 rng(20201203);
  std::size_t largest = 0;
  std::size_t over_500 = 0;
  for (int i = 0; i < kRandomFamilies; ++i) {
    const unsigned n = 8 + static_cast<unsigned>(rng() % 9);
    const oracle::MaskFamily masks =
        oracle::random_union_closed(rng, n, kRandomFamilyMaxSize, i % 4 == 0);
    const Family f = uclab::test::to_family(masks, n);
    largest = std::max(largest, f.size());
    over_500 += f.size() > 500 ? 1 : 0;
    if (!is_union_closed(f)) o.fail("random family " + std::to_string(i) + " not union-closed");
    if (aod(f, AodMethod::GammaWeighted) != aod(f, AodMethod::Pairwise)) {
      o.fail("random family " + std::to_string(i) + ": AOD forms differ");
    }
  }
  const double secs = seconds_since(t0);
  if (secs > kRuntimeLimitRandom) o.fail("runtime " + std::to_string(secs) + "s");
  if (o.pass) {
    o.detail = "grid + " + std::to_string(kRandomFamilies) + " random families (largest " +
               std::to_string(largest) + " sets, " + std::to_string(over_500) + " above 500), " + std::to_string(secs) + "s";
  }
  return o;
}

Outcome four_ninths() {
  Outcome o;
  const Rational v = average_abundance(reference_family("triple"));
  if (v != Rational(BigInt(4), BigInt(9))) o.fail("got " + v.str());
  o.detail = "average abundance = " + v.str();
  return o;
}

Outcome chain_scaling() {
  Outcome o;
  double lo = 1e300, hi = 0;
  std::ostringstream values;
  for (std::size_t n : {16u, 64u, 256u, 1024u, 4096u}) {
    const double scaled = average_abundance(reference_family("chain", n)).to_double() *
                          std::sqrt(static_cast<double>(n));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
    values << n << ":" << scaled << " ";
  }
  if (hi / lo > kChainSpread) o.fail("spread " + std::to_string(hi / lo));
  o.detail = values.str() + "spread " + std::to_string(hi / lo) + " <= 4";
  return o;
}

Outcome bound_suite() {
  Outcome o;
  int gated = 0;
  for (const BlockParams& p : oracle_grid()) {
    const BoundReport r = verify_bounds(p);
    if (!r.aod_lower) o.fail(params_str(p) + ": 1/m <= AOD violated");
    if (!r.tau_ok) continue;
    ++gated;
    if (!r.all_true()) o.fail(params_str(p) + ": bound report not all-true");
    // per-member T fraction, by enumeration
    const BlockFamily bf = build_block_family(p);
    const SetBits t = bf.t_union();
    const Rational limit(BigInt(static_cast<unsigned long>(p.m * p.s)),
                         BigInt(static_cast<unsigned long>(p.k)));
    for (const SetBits& a : materialize(bf, kGridCap)) {
      const Rational frac(BigInt(static_cast<unsigned long>(a.intersection_size(t))),
                          BigInt(static_cast<unsigned long>(a.cardinality())));
      if (frac > limit) o.fail(params_str(p) + ": member {" + format_set(a) + "} exceeds ms/k");
    }
  }
  if (gated == 0) o.fail("no grid instance with tau <= 1/4");
  if (o.pass) o.detail = std::to_string(gated) + " instances with tau <= 1/4 all-true; lower bound on all 20";
  return o;
}

Outcome frankl_witness() {
  Outcome o;
  for (const BlockParams& p : oracle_grid()) {
    const BlockFamily bf = build_block_family(p);
    const MaxAbundance top = max_abundance(materialize(bf, kGridCap));
    if (top.gamma < Rational(BigInt(1), BigInt(2))) o.fail(params_str(p) + ": gamma_max < 1/2");
    if (!bf.t_union().contains(top.element - 1)) o.fail(params_str(p) + ": argmax not in T");
  }
  if (o.pass) o.detail = "gamma_max >= 1/2 at an element of T on all 20 cells";
  return o;
}

Outcome theta_scale() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::size_t> targets = power_of_two_targets(7, 24);
  std::vector<SweepRecord> records;
  for (const SweepRow& row : sweep(targets)) {
    if (!row.record) {
      o.fail("n_target " + std::to_string(row.n_target) + " infeasible");
      continue;
    }
    records.push_back(*row.record);
  }
  if (records.size() != 18) o.fail("expected 18 rows");
  std::ostringstream d;
  for (BandQuantity q : {BandQuantity::Aod, BandQuantity::AvgAbundance}) {
    const BandReport band = theta_band(records, q, kThetaSpread);
    if (!band.band_ok) o.fail(std::string(to_string(q)) + " band spread exceeds 8");
    if (band.first_last_ratio > kThetaSpread) o.fail(std::string(to_string(q)) + " first/last drift");
    d << to_string(q) << " [" << band.min_ratio << ", " << band.max_ratio
      << "] first/last " << band.first_last_ratio << "; ";
  }
  const double secs = seconds_since(t0);
  if (secs > kRuntimeLimitSweep) o.fail("runtime " + std::to_string(secs) + "s");
  if (o.pass) o.detail = d.str() + std::to_string(secs) + "s";
  return o;
}

Outcome separation() {
  Outcome o;
  const auto t0 = Clock::now();
  const BlockFamily small = build_block_family({3, 2, 1});
  const Family f = materialize(small);
  const SeparationReport before = separates_points(f);
  const SetBits outside_t1 = small.block(0) & small.t_set(0).complement();
  bool witness_in_b1 = false;
  for (const auto& [i, j] : before.witness_pairs) {
    witness_in_b1 = witness_in_b1 || (outside_t1.contains(i - 1) && outside_t1.contains(j - 1));
  }
  if (before.separates || !witness_in_b1) o.fail("(3,2,1) should fail separation inside B_1\\T_1");
  const Family aug = augment_cosingletons(f);
  if (!separates_points(aug).separates || !is_union_closed(aug)) o.fail("(3,2,1) augmented family");

  const Family big = materialize(build_block_family({6, 3, 4}), kGridCap);
  const Family big_aug = augment_cosingletons(big);
  if (big.size() != 817 || big_aug.size() != 835) o.fail("(6,3,4) sizes");
  if (!separates_points(big_aug).separates || !is_union_closed(big_aug)) o.fail("(6,3,4) augmented family");
  // brute-force AOD on both sides, independent of the library
  const mpq_class a0 = oracle::aod_first_form(uclab::test::to_masks(big), 18);
  const mpq_class a1 = oracle::aod_first_form(uclab::test::to_masks(big_aug), 18);
  mpq_class rel = abs(a1 - a0) / a0;
  rel.canonicalize();
  if (Rational(a0) != aod(big, AodMethod::Pairwise) || Rational(a1) != aod(big_aug, AodMethod::Pairwise)) {
    o.fail("(6,3,4) library AOD differs from brute force");
  }
  const nlohmann::json golden =
      nlohmann::json::parse(uclab::test::read_text(uclab::test::golden_path("separate_k6_m3_s4.json")));
  const double threshold = golden["threshold"].get<double>();
  if (rel.get_num().get_str() != golden["relative_aod_change"]["num"] ||
      rel.get_den().get_str() != golden["relative_aod_change"]["den"]) {
    o.fail("relative AOD change " + rel.get_str() + " differs from golden");
  }
  if (!(rel.get_d() < threshold)) o.fail("relative AOD change above threshold");
  const double secs = seconds_since(t0);
  if (secs > kRuntimeLimitSeparation) o.fail("runtime " + std::to_string(secs) + "s");
  if (o.pass) {
    std::ostringstream d;
    d << "(6,3,4) relative AOD change " << rel.get_d() << " < " << threshold;
    o.detail = d.str();
  }
  return o;
}

Outcome t_invariance() {
  Outcome o;
  for (const BlockParams& p : oracle_grid()) {
    const Family lead = materialize(build_block_family(p), kGridCap);
    const Family trail = materialize(build_block_family(p, trailing_t_choice(p)), kGridCap);
    if (lead == trail) o.fail(params_str(p) + ": alternate T gave the same family");
    const MetricsReport a = analyze_family(lead);
    const MetricsReport b = analyze_family(trail);
    if (a.size != b.size || a.aod != b.aod || a.avg_abundance != b.avg_abundance ||
        a.max_abundance.gamma != b.max_abundance.gamma) {
      o.fail(params_str(p) + ": metrics differ between T choices");
    }
    std::vector<Rational> ga = abundance_profile(lead).gamma;
    std::vector<Rational> gb = abundance_profile(trail).gamma;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    if (ga != gb) o.fail(params_str(p) + ": abundance multisets differ");
  }
  if (o.pass) o.detail = "canonical vs trailing T_i identical on 20 cells";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence (k<=6, m<=3)", oracle_equivalence},
      {"AOD form equivalence", form_equivalence},
      {"triple family average abundance 4/9", four_ninths},
      {"chain family Theta(1/sqrt n)", chain_scaling},
      {"block-family bound suite", bound_suite},
      {"Frankl witness in T", frankl_witness},
      {"Theta band over 2^7..2^24", theta_scale},
      {"separation by co-singletons", separation},
      {"T-invariance", t_invariance},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
