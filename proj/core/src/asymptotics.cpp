#include "uclab/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>

#include "uclab/error.hpp"

namespace uclab {

std::size_t optimal_s(std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadM, "optimal_s needs m >= 2, got " + std::to_string(m));
  // ceil(log2 m) = bit_width(m - 1) for m >= 2
  return static_cast<std::size_t>(std::bit_width(m - 1)) + 2;
}

BlockParams plan_params(std::size_t n_target) {
  if (n_target < kSmallestFeasibleTarget) {
    throw Error(ErrorKind::Infeasible,
                "no valid (k, m, s) fits n_target=" + std::to_string(n_target) +
                    "; smallest feasible n_target is " + std::to_string(kSmallestFeasibleTarget));
  }
  const double n = static_cast<double>(n_target);
  auto m = static_cast<std::size_t>(std::llround(std::cbrt(n / std::log2(n))));
  m = std::max<std::size_t>(m, 2);
  for (; m >= 2; --m) {
    const std::size_t s = optimal_s(m);
    const std::size_t k = n_target / m;
    if (k >= s + 2) return BlockParams{k, m, s};
  }
  // Unreachable for n_target >= 10 (m = 2, s = 3, k >= 5).
  throw Error(ErrorKind::Infeasible, "no feasible parameters for n_target=" +
                                         std::to_string(n_target));
}

namespace {

SweepRecord run_row(std::size_t n_target) {
  SweepRecord rec;
  rec.n_target = n_target;
  rec.params = plan_params(n_target);
  const CountTable counts = count_table(rec.params);
  const BlockMetrics metrics = exact_metrics(rec.params);
  const BoundReport bounds = verify_bounds(rec.params, metrics);
  rec.log2_n_family = log2_big(counts.total);
  rec.aod = metrics.aod;
  rec.avg_abundance = metrics.avg_abundance;
  rec.aod_lower_ok = bounds.aod_lower;
  rec.tau_ok = bounds.tau_ok;
  if (rec.log2_n_family > 1.0) {
    const double scale = rec.log2_n_family / std::log2(rec.log2_n_family);
    rec.theta_aod = rec.aod.to_double() * scale;
    rec.theta_avg = rec.avg_abundance.to_double() * scale;
  }
  return rec;
}

SweepRow run_target(std::size_t n_target) {
  SweepRow row;
  row.n_target = n_target;
  try {
    row.record = run_row(n_target);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(std::span<const std::size_t> n_targets, unsigned workers) {
  std::vector<SweepRow> rows(n_targets.size());
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(n_targets.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_targets.size(); ++i) rows[i] = run_target(n_targets[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < n_targets.size(); i = next++) {
            rows[i] = run_target(n_targets[i]);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

std::vector<std::size_t> power_of_two_targets(unsigned from, unsigned to) {
  std::vector<std::size_t> out;
  for (unsigned e = from; e <= to; ++e) out.push_back(std::size_t{1} << e);
  return out;
}

const char* to_string(BandQuantity q) noexcept {
  return q == BandQuantity::Aod ? "aod" : "avg_abundance";
}

BandReport theta_band(std::span<const SweepRecord> records, BandQuantity quantity, double spread) {
  if (records.size() < 3) {
    throw Error(ErrorKind::TooFewRecords, "theta band needs at least 3 records, got " +
                                              std::to_string(records.size()));
  }
  BandReport r;
  r.quantity = quantity;
  r.spread = spread;
  std::vector<double> ratios;
  for (const SweepRecord& rec : records) {
    if (!(rec.log2_n_family > 2.0)) {
      throw Error(ErrorKind::PreconditionFailed,
                  "theta band needs log2|F| > 2 (n_target=" + std::to_string(rec.n_target) + ")");
    }
    ratios.push_back(quantity == BandQuantity::Aod ? rec.theta_aod : rec.theta_avg);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  r.min_ratio = *lo;
  r.max_ratio = *hi;
  r.first_last_ratio = std::max(ratios.front(), ratios.back()) /
                       std::min(ratios.front(), ratios.back());
  r.band_ok = r.min_ratio > 0.0 && r.max_ratio / r.min_ratio <= spread;
  return r;
}

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    if (!row.record) continue;
    const SweepRecord& r = *row.record;
    os << r.n_target << ',' << r.params.n() << ',' << r.params.k << ',' << r.params.m << ','
       << r.params.s << ',' << fmt12(r.log2_n_family) << ',' << r.aod.num().get_str() << ','
       << r.aod.den().get_str() << ',' << fmt12(r.aod.to_double()) << ','
       << r.avg_abundance.num().get_str() << ',' << r.avg_abundance.den().get_str() << ','
       << fmt12(r.avg_abundance.to_double()) << ',' << fmt12(r.theta_aod) << ','
       << fmt12(r.theta_avg) << '\n';
  }
}

}  // namespace uclab
