#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "golden_io.hpp"
#include "test_support.hpp"
#include "uclab/asymptotics.hpp"
#include "uclab/error.hpp"

namespace uclab {
namespace {

using test::q;

TEST(OptimalS, Examples) {
  EXPECT_EQ(optimal_s(2), 3u);
  EXPECT_EQ(optimal_s(4), 4u);
  EXPECT_EQ(optimal_s(5), 5u);
  try {
    optimal_s(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadM);
  }
}

TEST(OptimalS, IsSmallestSWithTauAtMostQuarter) {
  for (std::size_t m = 2; m <= 5000; ++m) {
    const std::size_t s = optimal_s(m);
    const Rational quarter = q(1, 4);
    EXPECT_LE(Rational(BigInt(static_cast<unsigned long>(m)), pow2(s)), quarter) << m;
    EXPECT_GT(Rational(BigInt(static_cast<unsigned long>(m)), pow2(s - 1)), quarter) << m;
  }
}

TEST(PlanParams, Examples) {
  try {
    plan_params(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
  EXPECT_EQ(plan_params(12), (BlockParams{6, 2, 3}));
  EXPECT_EQ(plan_params(10), (BlockParams{5, 2, 3}));

  const BlockParams million = plan_params(1'000'000);
  const double m_formula = std::round(std::cbrt(1e6 / std::log2(1e6)));
  EXPECT_EQ(m_formula, 37.0);
  EXPECT_LE(std::abs(static_cast<double>(million.m) - m_formula), 1.0);
  EXPECT_EQ(million.s, optimal_s(million.m));
}

TEST(PlanParams, AlwaysValidAndWithinTarget) {
  std::vector<std::size_t> targets;
  for (std::size_t n = 10; n <= 3000; ++n) targets.push_back(n);
  for (std::size_t n = 3001; n < (std::size_t{1} << 30); n = n * 5 / 3 + 7) targets.push_back(n);
  for (std::size_t n : targets) {
    const BlockParams p = plan_params(n);
    EXPECT_NO_THROW(p.validate()) << n;
    EXPECT_LE(p.n(), n);
    EXPECT_EQ(p.s, optimal_s(p.m));
  }
}

TEST(Sweep, SingleTargetComposesExactMetrics) {
  const std::vector<std::size_t> targets{12};
  const std::vector<SweepRow> rows = sweep(targets);
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_TRUE(rows[0].record.has_value());
  EXPECT_EQ(rows[0].record->params, (BlockParams{6, 2, 3}));
  EXPECT_EQ(rows[0].record->aod, exact_metrics(BlockParams{6, 2, 3}).aod);
}

TEST(Sweep, InfeasibleRowsAreRecordedAndSkipped) {
  const std::vector<std::size_t> targets{5, 12};
  const std::vector<SweepRow> rows = sweep(targets);
  EXPECT_FALSE(rows[0].record.has_value());
  EXPECT_NE(rows[0].error.find("smallest feasible n_target is 10"), std::string::npos);
  EXPECT_TRUE(rows[1].record.has_value());
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  EXPECT_EQ(test::parse_csv(csv.str()).size(), 2u);
}

class CanonicalSweep : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const std::vector<std::size_t> targets = power_of_two_targets(7, 24);
    rows_ = new std::vector<SweepRow>(sweep(targets));
    for (const SweepRow& r : *rows_) records_.push_back(*r.record);
  }
  static void TearDownTestSuite() { delete rows_; }
  static inline std::vector<SweepRow>* rows_ = nullptr;
  static inline std::vector<SweepRecord> records_;
};

TEST_F(CanonicalSweep, EighteenRowsWithTauWithinQuarter) {
  ASSERT_EQ(records_.size(), 18u);
  for (const SweepRecord& r : records_) {
    EXPECT_TRUE(r.tau_ok) << r.n_target;
    EXPECT_TRUE(r.aod_lower_ok) << r.n_target;
    EXPECT_GE(r.aod, Rational(BigInt(1), BigInt(static_cast<unsigned long>(r.params.m))));
    EXPECT_TRUE(std::isfinite(r.theta_aod));
    EXPECT_TRUE(std::isfinite(r.theta_avg));
  }
}

TEST_F(CanonicalSweep, AodNeverRisesMoreThanTenPercent) {
  for (std::size_t i = 1; i < records_.size(); ++i) {
    EXPECT_LE(records_[i].aod.to_double(), 1.1 * records_[i - 1].aod.to_double())
        << records_[i].n_target;
  }
}

TEST_F(CanonicalSweep, ThetaBandsHold) {
  for (BandQuantity quantity : {BandQuantity::Aod, BandQuantity::AvgAbundance}) {
    const BandReport band = theta_band(records_, quantity);
    EXPECT_TRUE(band.band_ok) << to_string(quantity);
    EXPECT_LE(band.max_ratio / band.min_ratio, 8.0);
    EXPECT_LE(band.first_last_ratio, 8.0);
  }
}

TEST_F(CanonicalSweep, MatchesGoldenCsv) {
  std::ostringstream csv;
  write_sweep_csv(csv, *rows_);
  const auto got = test::parse_csv(csv.str());
  const auto want = test::parse_csv(test::read_text(test::golden_path("sweep_7_24.csv")));
  ASSERT_EQ(got.size(), want.size());
  ASSERT_EQ(got[0], want[0]);
  const std::vector<std::size_t> float_cols{5, 8, 11, 12, 13};
  for (std::size_t r = 1; r < got.size(); ++r) {
    ASSERT_EQ(got[r].size(), 14u);
    for (std::size_t c = 0; c < 14; ++c) {
      const bool is_float =
          std::find(float_cols.begin(), float_cols.end(), c) != float_cols.end();
      if (is_float) {
        const double g = std::stod(got[r][c]);
        const double w = std::stod(want[r][c]);
        EXPECT_LE(std::abs(g - w), 1e-9 * std::abs(w)) << "row " << r << " col " << c;
      } else {
        EXPECT_EQ(got[r][c], want[r][c]) << "row " << r << " col " << c;
      }
    }
  }
}

TEST_F(CanonicalSweep, WorkersGiveIdenticalRows) {
  const std::vector<std::size_t> targets = power_of_two_targets(7, 16);
  const std::vector<SweepRow> serial = sweep(targets, 1);
  const std::vector<SweepRow> parallel = sweep(targets, 4);
  std::ostringstream a, b;
  write_sweep_csv(a, serial);
  write_sweep_csv(b, parallel);
  EXPECT_EQ(a.str(), b.str());
}

TEST(ThetaBand, DuplicatedRecordHasUnitSpread) {
  const std::vector<std::size_t> targets{4096, 4096, 4096};
  std::vector<SweepRecord> recs;
  for (const SweepRow& r : sweep(targets)) recs.push_back(*r.record);
  const BandReport band = theta_band(recs, BandQuantity::Aod, 1.0);
  EXPECT_TRUE(band.band_ok);
  EXPECT_DOUBLE_EQ(band.max_ratio, band.min_ratio);
}

TEST(ThetaBand, Errors) {
  const std::vector<std::size_t> targets{4096, 8192};
  std::vector<SweepRecord> recs;
  for (const SweepRow& r : sweep(targets)) recs.push_back(*r.record);
  try {
    theta_band(recs, BandQuantity::Aod);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewRecords);
  }
  recs.push_back(recs.back());
  recs.back().log2_n_family = 1.5;
  EXPECT_THROW(theta_band(recs, BandQuantity::Aod), Error);
}

TEST(ThetaBand, NarrowSpreadFails) {
  const std::vector<std::size_t> targets = power_of_two_targets(7, 12);
  std::vector<SweepRecord> recs;
  for (const SweepRow& r : sweep(targets)) recs.push_back(*r.record);
  EXPECT_FALSE(theta_band(recs, BandQuantity::Aod, 1.01).band_ok);
}

}  // namespace
}  // namespace uclab
