#pragma once

// Oracle-equivalence checks shared by the `verify` subcommand and the test
// suites: closed forms against quadrature, the vanishing cross integral,
// operator inequalities on random and extremal one-photon states.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pf/field_kernels.hpp"
#include "pf/hydrogen_dipole.hpp"
#include "pf/self_energy.hpp"

namespace pf {

inline constexpr std::array<double, 5> kOracleCutoffs = {0.1, 0.25, 1.0, 4.0, 10.0};
inline constexpr std::uint64_t kAmplitudeSeed = 20240521;

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random one-photon amplitude: a sum of four terms c k^m exp(-b k) with
/// m drawn from {-1, -1/2, 0, 1/2, 1, 2}, supported on [0, s lambda] for
/// s in [0.5, 2]. Every draw has finite, positive field energy.
inline OnePhotonAmplitude random_amplitude(std::mt19937_64& rng, double lambda) {
  static constexpr std::array<double, 6> kPowers = {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  struct Term {
    double c, m, b;
  };
  std::array<Term, 4> terms{};
  for (auto& t : terms) {
    t.c = 2.0 * unit_uniform(rng) - 1.0;
    t.m = kPowers[static_cast<std::size_t>(unit_uniform(rng) * kPowers.size())];
    t.b = 5.0 * unit_uniform(rng) / lambda;
  }
  const double support = lambda * (0.5 + 1.5 * unit_uniform(rng));
  return {[terms](double k) {
            double sum = 0.0;
            for (const auto& t : terms) sum += t.c * std::pow(k, t.m) * std::exp(-t.b * k);
            return sum;
          },
          support};
}

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      ///< worst observed deviation or ratio
  double threshold = 0.0;  ///< limit it was compared against
};

inline double relative_deviation(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

inline CheckResult check_e_field_integral() {
  CheckResult r{"e_field_integral == quadrature (rel 1e-9)", true, 0.0, 1e-9};
  for (double lambda : kOracleCutoffs)
    r.worst = std::max(r.worst, relative_deviation(e_field_integral(lambda),
                                                   e_field_integral_quadrature(lambda).value));
  r.passed = r.worst <= r.threshold;
  return r;
}

inline CheckResult check_dd_commutator() {
  CheckResult r{"dd_commutator == quadrature (rel 1e-9)", true, 0.0, 1e-9};
  for (double lambda : kOracleCutoffs)
    r.worst = std::max(r.worst, relative_deviation(dd_commutator(lambda),
                                                   dd_commutator_quadrature(lambda).value));
  r.passed = r.worst <= r.threshold;
  return r;
}

/// alpha [D, D^*] - alpha <0|E (p^2+H_f)^{-1} E^*|0> = sigma_leading on a 4 x 5 grid.
inline CheckResult check_cancellation_identity() {
  CheckResult r{"alpha*[D,D*] - alpha*E-integral == sigma_leading (rel 1e-12)", true, 0.0, 1e-12};
  constexpr std::array<double, 4> kAlphas = {1e-4, 1.0 / 137.0, 0.03, 0.1};
  for (double alpha : kAlphas)
    for (double lambda : kOracleCutoffs) {
      const FieldParams params{alpha, lambda, 0.5};
      const double lhs = alpha * dd_commutator(lambda) - alpha * e_field_integral(lambda);
      r.worst = std::max(r.worst, relative_deviation(lhs, sigma_leading(params)));
    }
  r.passed = r.worst <= r.threshold;
  return r;
}

inline CheckResult check_gh_cross_integral() {
  CheckResult r{"G.H cross integral vanishes (abs 1e-12)", true, 0.0, 1e-12};
  for (double lambda : {0.25, 1.0, 5.0})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        r.worst = std::max(r.worst, std::abs(gh_cross_integral(lambda, i, j)));
  r.passed = r.worst < r.threshold;
  return r;
}

inline const char* inequality_name(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::DstarD: return "D*D";
    case InequalityKind::EstarE: return "E*E";
    case InequalityKind::NormD: return "|D|*|D|";
    case InequalityKind::NormE: return "|E|*|E|";
  }
  return "?";
}

inline constexpr std::array<InequalityKind, 4> kInequalityKinds = {
    InequalityKind::DstarD, InequalityKind::EstarE, InequalityKind::NormD, InequalityKind::NormE};

/// Largest ratio / bound over `count` seeded random amplitudes; must stay <= 1.
inline CheckResult check_inequality_random(InequalityKind kind, double lambda, int count = 100,
                                           std::uint64_t seed = kAmplitudeSeed) {
  CheckResult r{std::string(inequality_name(kind)) + " <= bound * H_f on random states", true,
                0.0, 0.0};
  const double bound = operator_inequality_bound(kind, lambda);
  r.threshold = bound + 1e-9;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i)
    r.worst = std::max(r.worst, operator_inequality_ratio(kind, random_amplitude(rng, lambda), lambda));
  r.passed = r.worst <= r.threshold;
  return r;
}

inline CheckResult check_inequality_extremal(InequalityKind kind, double lambda) {
  CheckResult r{std::string(inequality_name(kind)) + " extremal state reaches >= 99.9% of bound",
                true, 0.0, 0.0};
  const double bound = operator_inequality_bound(kind, lambda);
  r.worst = operator_inequality_ratio(kind, extremal_amplitude(kind, lambda), lambda);
  r.threshold = 0.999 * bound;
  r.passed = r.worst >= r.threshold && r.worst <= bound + 1e-9;
  return r;
}

inline CheckResult check_secular_ordering() {
  CheckResult r{"0 <= sigma_secular <= sigma_upper_bound", true, 0.0, 0.0};
  for (double alpha : {1e-4, 1e-3, 1e-2, 1.0 / 137.0})
    for (double lambda : {0.25, 1.0, 4.0}) {
      const FieldParams params{alpha, lambda, 0.5};
      const double secular = sigma_secular(params);
      const double excess = secular - sigma_upper_bound(params);
      r.worst = std::max(r.worst, excess);
      if (secular < 0.0) r.passed = false;
    }
  r.passed = r.passed && r.worst <= 1e-12;
  r.threshold = 1e-12;
  return r;
}

inline CheckResult check_dipole_c2() {
  CheckResult r{"c_2 == 96 / (81 sqrt 18) (rel 1e-10)", true, 0.0, 1e-10};
  const double analytic = 96.0 / (81.0 * std::sqrt(18.0));
  for (int z : {1, 13})
    r.worst = std::max(r.worst, relative_deviation(dipole_coefficient(HydrogenModel(z), 2), analytic));
  r.passed = r.worst <= r.threshold;
  return r;
}

inline CheckResult check_spectral_matches_approx() {
  CheckResult r{"spectral R_C with sum 2/15 and zero gap == approximate R_C (rel 1e-12)", true,
                0.0, 1e-12};
  for (int z : {1, 13})
    for (double lambda : {0.25, 1.0}) {
      const HydrogenModel model(z);
      const FieldParams params{1.0 / 137.0, lambda, 0.5};
      const SpectralTerm frozen{kSumRuleTarget, 0.0};
      const double spectral = radiative_correction_from_terms(model.e0(), params, {&frozen, 1});
      const double approx = radiative_correction(model, params, RadiativeMode::approx());
      r.worst = std::max(r.worst, relative_deviation(spectral, approx));
    }
  r.passed = r.worst <= r.threshold;
  return r;
}

/// Every oracle identity, in a fixed order.
inline std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> results;
  results.push_back(check_e_field_integral());
  results.push_back(check_dd_commutator());
  results.push_back(check_cancellation_identity());
  results.push_back(check_gh_cross_integral());
  for (auto kind : kInequalityKinds) {
    results.push_back(check_inequality_random(kind, 1.0));
    results.push_back(check_inequality_extremal(kind, 1.0));
  }
  results.push_back(check_secular_ordering());
  results.push_back(check_dipole_c2());
  results.push_back(check_spectral_matches_approx());
  return results;
}

}  // namespace pf
