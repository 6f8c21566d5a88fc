#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pf/threshold.hpp"

namespace {

using pf::HydrogenModel;
using pf::ThresholdBranch;
using pf::test::kPi;

// Direct evaluation of the error-vs-correction branch, in units of (beta Z)^2.
double coefficient_oracle(double lambda, double a) {
  const double l2 = lambda * lambda;
  const double denom = 28.0 * l2 * (1.0 + l2) / (3.0 * kPi * kPi * (1.0 - a)) + 7.0 * l2 / (kPi * kPi);
  return 16.0 * kPi / 15.0 * std::log1p(lambda) / denom / 4.0;
}

TEST(AlphaMax, HalfSplitting) {
  const auto r = pf::alpha_max(HydrogenModel(13), 0.25, 0.5);
  EXPECT_EQ(r.branch, ThresholdBranch::ErrorVsCorrection);
  ASSERT_TRUE(r.coefficient.has_value());
  EXPECT_NEAR(*r.coefficient, coefficient_oracle(0.25, 0.5), 1e-13);
  EXPECT_NEAR(*r.coefficient, 1.100, 0.005);
  EXPECT_EQ(r.a_used, 0.5);
  EXPECT_GT(r.alpha_max, 0.0);
}

TEST(AlphaMax, ReproducesPointEightFive) {
  const auto r = pf::alpha_max(HydrogenModel(13), 0.25, 0.642);
  ASSERT_TRUE(r.coefficient.has_value());
  EXPECT_NEAR(*r.coefficient, 0.851, 0.001);
}

TEST(AlphaMax, VanishesAsSplittingApproachesOne) {
  const auto r = pf::alpha_max(HydrogenModel(13), 0.25, 1.0 - 1e-9);
  EXPECT_EQ(r.branch, ThresholdBranch::ErrorVsCorrection);
  EXPECT_LT(*r.coefficient, 1e-7);
}

TEST(AlphaMax, AprioriBranchWhenBindingIsStrong) {
  const auto r = pf::alpha_max(HydrogenModel(1, 100.0), 4.0, 0.5);
  EXPECT_EQ(r.branch, ThresholdBranch::AprioriConstraint);
  EXPECT_NEAR(r.alpha_max, 0.5 * kPi / 16.0, 1e-15);
  EXPECT_FALSE(r.coefficient.has_value());
}

TEST(AlphaMax, RejectsBadArguments) {
  EXPECT_THROW(pf::alpha_max(HydrogenModel(13), 0.25, 0.0), pf::ArgumentError);
  EXPECT_THROW(pf::alpha_max(HydrogenModel(13), 0.25, 1.0), pf::ArgumentError);
  EXPECT_THROW(pf::alpha_max(HydrogenModel(13), -0.25, 0.5), pf::ArgumentError);
}

TEST(AlphaMax, FirstBranchScalesAsChargeSquared) {
  for (double a : {0.1, 0.5, 0.9}) {
    const double r1 = pf::alpha_max(HydrogenModel(3), 0.25, a).alpha_max;
    const double r2 = pf::alpha_max(HydrogenModel(6), 0.25, a).alpha_max;
    EXPECT_NEAR(r2 / r1, 4.0, 1e-12);
  }
}

TEST(CoefficientScan, FullGridContainsPointEightFive) {
  const auto grid = pf::uniform_grid(0.01, 0.99, 0.01);
  ASSERT_EQ(grid.size(), 99u);
  const auto scan = pf::coefficient_scan(HydrogenModel(13), 0.25, grid);
  bool found = false;
  for (const auto& row : scan.rows)
    if (std::abs(row.a - 0.64) < 1e-9) {
      ASSERT_TRUE(row.coefficient.has_value());
      EXPECT_GE(*row.coefficient, 0.83);
      EXPECT_LE(*row.coefficient, 0.87);
      found = true;
    }
  EXPECT_TRUE(found);
  // alpha_max decreases with a on this branch, so the smallest a wins.
  EXPECT_EQ(scan.best, 0u);
  for (const auto& row : scan.rows) EXPECT_LE(row.alpha_max, scan.rows[scan.best].alpha_max);
}

TEST(CoefficientScan, SinglePointAndOrdering) {
  const std::vector<double> single = {0.5};
  const auto one = pf::coefficient_scan(HydrogenModel(13), 0.25, single);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_NEAR(*one.rows[0].coefficient, 1.100, 0.005);

  const std::vector<double> unsorted = {0.7, 0.2, 0.5};
  const auto scan = pf::coefficient_scan(HydrogenModel(13), 0.25, unsorted);
  ASSERT_EQ(scan.rows.size(), 3u);
  EXPECT_EQ(scan.rows[0].a, 0.2);
  EXPECT_EQ(scan.rows[1].a, 0.5);
  EXPECT_EQ(scan.rows[2].a, 0.7);

  EXPECT_THROW(pf::coefficient_scan(HydrogenModel(13), 0.25, std::vector<double>{}), pf::ArgumentError);
  EXPECT_THROW(pf::coefficient_scan(HydrogenModel(13), 0.25, std::vector<double>{1.2}), pf::ArgumentError);
}

TEST(ZMin, Examples) {
  constexpr double kB = 1.0 / 137.0;
  EXPECT_EQ(pf::z_min(kB, kB, 0.85), 13);
  EXPECT_EQ(pf::z_min(kB, kB, 1.100), 12);
  EXPECT_EQ(pf::z_min(kB, kB, 1e300), 1);
  EXPECT_FALSE(pf::z_min(kB, 10.0, 1e-6).has_value());
  EXPECT_THROW(pf::z_min(0.0, kB, 1.0), pf::ArgumentError);
}

TEST(ZMin, MatchesBruteForceScan) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> log_u(-4.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double beta = std::pow(10.0, log_u(rng) - 1.0);
    const double alpha = std::pow(10.0, log_u(rng) - 1.0);
    const double coefficient = std::pow(10.0, log_u(rng) + 1.0);
    std::optional<int> brute;
    for (int z = 1; z <= 200 && !brute; ++z)
      if (alpha <= coefficient * (beta * z) * (beta * z)) brute = z;
    if (brute && *brute > pf::kMaxPhysicalCharge) brute.reset();
    EXPECT_EQ(pf::z_min(beta, alpha, coefficient), brute)
        << beta << " " << alpha << " " << coefficient;
  }
}

TEST(EnhancementCertificate, Examples) {
  const pf::FieldParams p{1.0 / 137.0, 0.25, 0.642};
  const auto heavy = pf::enhancement_certificate(HydrogenModel(13), p);
  EXPECT_TRUE(heavy.enhanced);
  EXPECT_GT(heavy.margin, 0.0);
  EXPECT_NEAR(heavy.radiative_correction, 2.45730e-5, 1e-9);

  const auto light = pf::enhancement_certificate(HydrogenModel(1), p);
  EXPECT_FALSE(light.enhanced);
  EXPECT_NEAR(light.radiative_correction * 169.0, heavy.radiative_correction, 1e-15);

  const auto none = pf::enhancement_certificate(HydrogenModel(13), {0.0, 0.25, 0.642});
  EXPECT_FALSE(none.enhanced);
  EXPECT_EQ(none.margin, 0.0);

  EXPECT_THROW(pf::enhancement_certificate(HydrogenModel(13), {1.0, 0.25, 0.1}), pf::ConstraintError);
}

TEST(EnhancementCertificate, MonotoneInCharge) {
  for (double a : {0.3, 0.642, 0.9}) {
    const pf::FieldParams p{1.0 / 137.0, 0.25, a};
    bool seen = false;
    for (int z = 1; z <= 137; ++z) {
      const bool enhanced = pf::enhancement_certificate(HydrogenModel(z), p).enhanced;
      if (seen) {
        EXPECT_TRUE(enhanced) << "a " << a << " Z " << z;
      }
      seen = seen || enhanced;
    }
    EXPECT_TRUE(seen);
  }
}

TEST(EnhancementCertificate, AgreesWithAlphaMax) {
  for (double alpha : {1e-4, 1e-3, 1.0 / 137.0, 0.02})
    for (int z : {1, 5, 13, 40, 100})
      for (double a : {0.2, 0.5, 0.8}) {
        const pf::FieldParams p{alpha, 0.25, a};
        if (alpha > pf::admissible_alpha_bound(p)) continue;
        const auto rep = pf::alpha_max(HydrogenModel(z), 0.25, a);
        const bool enhanced = pf::enhancement_certificate(HydrogenModel(z), p).enhanced;
        EXPECT_EQ(enhanced, alpha < rep.alpha_max) << alpha << " " << z << " " << a;
      }
}

}  // namespace
