#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uclab/construction.hpp"
#include "uclab/rational.hpp"

namespace uclab {

/// ceil(log2 m) + 2, the smallest s with m * 2^-s <= 1/4. Throws BadM for m < 2.
std::size_t optimal_s(std::size_t m);

/// Smallest n_target for which plan_params succeeds.
inline constexpr std::size_t kSmallestFeasibleTarget = 10;

/// m = max(2, round((n/log2 n)^(1/3))), s = optimal_s(m), k = floor(n/m);
/// m is decremented until k >= s + 2. Throws Infeasible.
BlockParams plan_params(std::size_t n_target);

struct SweepRecord {
  std::size_t n_target = 0;
  BlockParams params;
  double log2_n_family = 0.0;  // log2 |F|
  Rational aod;
  Rational avg_abundance;
  double theta_aod = 0.0;  // aod * log2|F| / log2(log2|F|)
  double theta_avg = 0.0;
  bool aod_lower_ok = false;  // 1/m <= aod
  bool tau_ok = false;
};

struct SweepRow {
  std::size_t n_target = 0;
  std::optional<SweepRecord> record;  // empty when the target is infeasible
  std::string error;
};

/// Rows come back in input order regardless of `workers`.
std::vector<SweepRow> sweep(std::span<const std::size_t> n_targets, unsigned workers = 1);

/// 2^from, ..., 2^to.
std::vector<std::size_t> power_of_two_targets(unsigned from, unsigned to);

enum class BandQuantity { Aod, AvgAbundance };

struct BandReport {
  BandQuantity quantity = BandQuantity::Aod;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double first_last_ratio = 0.0;  // max(first, last) / min(first, last)
  double spread = 0.0;
  bool band_ok = false;
};

inline constexpr double kDefaultSpread = 8.0;

/// Throws TooFewRecords for fewer than 3 records, PreconditionFailed if some
/// record has log2|F| <= 2.
BandReport theta_band(std::span<const SweepRecord> records, BandQuantity quantity,
                      double spread = kDefaultSpread);

const char* to_string(BandQuantity q) noexcept;

/// CSV with the fixed header; floats printed with 12 significant digits.
/// Infeasible rows are omitted.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
inline constexpr const char* kSweepCsvHeader =
    "n_target,n,k,m,s,log2_N,aod_num,aod_den,aod_approx,avg_num,avg_den,avg_approx,"
    "theta_aod,theta_avg";

}  // namespace uclab
