#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pf/hydrogen_dipole.hpp"

namespace {

using pf::FieldParams;
using pf::HydrogenModel;
using pf::RadiativeMode;
using pf::test::kPi;

// Reference overlaps (1/sqrt 3) int R_n1 R_10 r^2 dr evaluated independently
// with 30-digit arbitrary-precision quadrature.
constexpr double kC2 = 0.279350827135426182;
constexpr double kC3Sq = 0.017578125;
constexpr double kC5Sq = 0.00334520253006030355;
constexpr double kC10Sq = 0.000397328411609323332;
constexpr double kPartialSum20 = 0.111873462743172414;

TEST(HydrogenModel, GroundStateAndVirial) {
  const HydrogenModel h(13);
  EXPECT_NEAR(h.e0(), 169.0 / (4.0 * 137.0 * 137.0), 1e-18);
  EXPECT_EQ(h.p_phi_sq(), h.e0());
  EXPECT_NEAR(h.bohr_radius(), 2.0 * 137.0 / 13.0, 1e-12);
  EXPECT_THROW(HydrogenModel(0), pf::ArgumentError);
  EXPECT_THROW(HydrogenModel(1, -1.0), pf::ArgumentError);
}

TEST(LevelEnergy, Examples) {
  EXPECT_NEAR(pf::level_energy(HydrogenModel(1), 1), 1.33198e-5, 1e-10);
  EXPECT_NEAR(pf::level_energy(HydrogenModel(13), 1), 2.25105e-3, 1e-8);
  EXPECT_EQ(pf::level_energy(HydrogenModel(13), 1), HydrogenModel(13).e0());
  EXPECT_THROW(pf::level_energy(HydrogenModel(1), 0), pf::ArgumentError);
}

TEST(LevelEnergy, StrictlyDecreasingToZero) {
  const HydrogenModel h(3);
  double previous = pf::level_energy(h, 1);
  for (int n = 2; n <= 500; ++n) {
    const double e = pf::level_energy(h, n);
    EXPECT_LT(e, previous);
    EXPECT_GT(e, 0.0);
    previous = e;
  }
  EXPECT_LT(pf::level_energy(h, 100000), 1e-12);
}

TEST(RadialWavefunction, NormalizedAndOrthogonal) {
  const double a = 3.7;
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n && l <= 2; ++l) {
      const double norm = pf::test::simpson(
          [&](double r) {
            const double R = pf::radial_wavefunction(n, l, r, a);
            return R * R * r * r;
          },
          0.0, 6.0 * n * n * a + 40.0 * a, 1 << 16);
      EXPECT_NEAR(norm, 1.0, 1e-9) << "n " << n << " l " << l;
    }
  const double overlap = pf::test::simpson(
      [&](double r) {
        return pf::radial_wavefunction(2, 1, r, a) * pf::radial_wavefunction(3, 1, r, a) * r * r;
      },
      0.0, 200.0 * a, 1 << 16);
  EXPECT_NEAR(overlap, 0.0, 1e-10);
}

TEST(DipoleCoefficient, SecondLevelMatchesClosedForm) {
  const double analytic = 192.0 / (81.0 * std::sqrt(24.0) * std::sqrt(3.0));
  const double c2 = pf::dipole_coefficient(HydrogenModel(1), 2);
  EXPECT_NEAR(c2, analytic, 1e-12);
  EXPECT_NEAR(c2, kC2, 1e-12);
  EXPECT_NEAR(c2 * c2, 0.078038, 1e-5);
}

TEST(DipoleCoefficient, HigherLevelsMatchReference) {
  const HydrogenModel h(1);
  EXPECT_NEAR(std::pow(pf::dipole_coefficient(h, 3), 2), kC3Sq, 1e-12);
  EXPECT_NEAR(std::pow(pf::dipole_coefficient(h, 5), 2), kC5Sq, 1e-12);
  EXPECT_NEAR(std::pow(pf::dipole_coefficient(h, 10), 2), kC10Sq, 1e-12);
}

TEST(DipoleCoefficient, IndependentOfCharge) {
  for (int n : {2, 4, 9}) {
    const double c1 = pf::dipole_coefficient(HydrogenModel(1), n);
    const double c13 = pf::dipole_coefficient(HydrogenModel(13), n);
    EXPECT_NEAR(c1, c13, 1e-11 * c1);
  }
}

TEST(DipoleCoefficient, NoGroundLevelPState) {
  EXPECT_THROW(pf::dipole_coefficient(HydrogenModel(1), 1), pf::ArgumentError);
}

TEST(SumRulePartial, Examples) {
  const HydrogenModel h(1);
  EXPECT_NEAR(pf::sum_rule_partial(h, 2).partial_sum, kC2 * kC2, 1e-12);
  const auto s20 = pf::sum_rule_partial(h, 20);
  EXPECT_NEAR(s20.partial_sum, kPartialSum20, 1e-11);
  EXPECT_EQ(s20.coefficients.size(), 19u);
  EXPECT_EQ(s20.target, 2.0 / 15.0);
  EXPECT_GT(s20.partial_sum, kC2 * kC2);
  EXPECT_LT(s20.partial_sum, 1.0 / 3.0);
  EXPECT_LT(std::abs(s20.partial_sum - s20.target), 0.2 * s20.target);
  EXPECT_THROW(pf::sum_rule_partial(h, 1), pf::ArgumentError);
}

TEST(SumRulePartial, MonotoneAndBounded) {
  const auto s = pf::sum_rule_partial(HydrogenModel(2), 30);
  double running = 0.0;
  for (const auto& term : s.coefficients) {
    EXPECT_GE(term.c, 0.0);
    EXPECT_LT(term.c, 1.0);
    const double next = running + term.c * term.c;
    EXPECT_GT(next, running);
    running = next;
  }
  EXPECT_NEAR(running, s.partial_sum, 1e-15);
  EXPECT_LT(s.partial_sum, 1.0 / 3.0);
}

TEST(ExcitationIntegral, Examples) {
  EXPECT_NEAR(pf::excitation_integral(1.0, 0.0), std::log(2.0), 1e-13);
  EXPECT_NEAR(pf::excitation_integral(0.25, 0.0), 0.2231436, 1e-7);
  EXPECT_NEAR(pf::excitation_integral(1e-9, 0.0), 1e-9, 1e-17);
  EXPECT_THROW(pf::excitation_integral(1.0, -1e-6), pf::ArgumentError);
  EXPECT_THROW(pf::excitation_integral(0.0, 0.1), pf::ArgumentError);
}

TEST(ExcitationIntegral, MatchesReferenceWithGap) {
  // 30-digit reference values; a gap of 1e-5 puts a sharp knee near p = 1e-5.
  EXPECT_NEAR(pf::excitation_integral(1.0, 1e-5), 0.693043979668564937, 1e-12);
  EXPECT_NEAR(pf::excitation_integral(1.0, 0.01), 0.657955929005451363, 1e-12);
  EXPECT_NEAR(pf::excitation_integral(1.0, 0.3), 0.408994208706882986, 1e-12);
  const double simpson =
      pf::test::simpson([](double p) { return p / (0.3 + p * p + p); }, 0.0, 1.0);
  EXPECT_NEAR(pf::excitation_integral(1.0, 0.3), simpson, 1e-12);
}

TEST(ExcitationIntegral, MonotoneInGapAndCutoff) {
  double previous = pf::excitation_integral(1.0, 0.0);
  for (double gap = 1e-4; gap < 10.0; gap *= 3.0) {
    const double v = pf::excitation_integral(1.0, gap);
    EXPECT_LT(v, previous);
    previous = v;
  }
  previous = 0.0;
  for (double lambda = 0.01; lambda < 100.0; lambda *= 2.0) {
    const double v = pf::excitation_integral(lambda, 0.01);
    EXPECT_GT(v, previous);
    previous = v;
  }
}

TEST(RadiativeCorrection, ApproximateExample) {
  const HydrogenModel h(13);
  const FieldParams p{1.0 / 137.0, 0.25, 0.5};
  const double direct = p.alpha * h.e0() * 32.0 * kPi / 15.0 * std::log(1.25);
  EXPECT_NEAR(pf::radiative_correction(h, p, RadiativeMode::approx()), direct, 1e-18);
  EXPECT_NEAR(pf::radiative_correction(h, p, RadiativeMode::approx()), 2.45726e-5, 1e-9);
  EXPECT_EQ(pf::radiative_correction(h, {0.0, 0.25, 0.5}, RadiativeMode::approx()), 0.0);
  EXPECT_EQ(pf::radiative_correction(h, {0.0, 0.25, 0.5}, RadiativeMode::spectral(5)), 0.0);
}

TEST(RadiativeCorrection, ScalesAsChargeSquared) {
  const FieldParams p{1.0 / 137.0, 0.25, 0.5};
  const double r1 = pf::radiative_correction(HydrogenModel(1), p, RadiativeMode::approx());
  const double r2 = pf::radiative_correction(HydrogenModel(2), p, RadiativeMode::approx());
  EXPECT_NEAR(r2 / r1, 4.0, 1e-12);
}

TEST(RadiativeCorrection, FrozenSumRuleReproducesApproximation) {
  for (int z : {1, 13, 50})
    for (double lambda : {0.1, 0.25, 1.0, 4.0}) {
      const HydrogenModel h(z);
      const FieldParams p{1.0 / 137.0, lambda, 0.5};
      const pf::SpectralTerm frozen{2.0 / 15.0, 0.0};
      const double spectral = pf::radiative_correction_from_terms(h.e0(), p, {&frozen, 1});
      const double approx = pf::radiative_correction(h, p, RadiativeMode::approx());
      EXPECT_NEAR(spectral, approx, 1e-12 * approx);
    }
}

TEST(RadiativeCorrection, SpectralOverApproxTracksPartialSum) {
  const HydrogenModel h(1);
  const FieldParams p{1.0 / 137.0, 1.0, 0.5};
  const double spectral = pf::radiative_correction(h, p, RadiativeMode::spectral(20));
  const double approx = pf::radiative_correction(h, p, RadiativeMode::approx());
  const double expected = pf::sum_rule_partial(h, 20).partial_sum / (2.0 / 15.0);
  // Nonzero gaps only lower each term, by a few parts in 1e4 here.
  EXPECT_NEAR(spectral / approx, expected, 5e-4);
  EXPECT_LT(spectral / approx, expected);
}

TEST(BindingGainUpper, Examples) {
  const HydrogenModel h(1);
  EXPECT_NEAR(pf::binding_gain_upper(h, {0.01, 0.25, 0.5}), 9.9601e-5, 1e-9);
  EXPECT_NEAR(pf::binding_gain_upper(h, {0.01, 1e-10, 0.5}), 0.0, 1e-12);
  EXPECT_NEAR(pf::binding_gain_upper(1.0, 1.0), 32.0 * kPi / 3.0 * std::log(2.0), 1e-13);
  EXPECT_THROW(pf::binding_gain_upper(-1.0, 1.0), pf::ArgumentError);
}

TEST(BindingGainUpper, DominatesRadiativeCorrectionPerUnitCoupling) {
  for (int z : {1, 13})
    for (double lambda : {0.25, 1.0}) {
      const HydrogenModel h(z);
      const FieldParams p{1.0 / 137.0, lambda, 0.5};
      const double upper = p.alpha * pf::binding_gain_upper(h, p);
      EXPECT_GE(upper, pf::radiative_correction(h, p, RadiativeMode::approx()));
      EXPECT_GE(upper, pf::radiative_correction(h, p, RadiativeMode::spectral(10)));
    }
}

}  // namespace
