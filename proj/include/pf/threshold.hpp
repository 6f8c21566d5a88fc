#pragma once

// Coupling thresholds for enhanced binding in the hydrogenic case: the
// largest alpha for which the radiative correction beats the self-energy
// error envelope, its a-dependence, and the smallest nuclear charge that
// satisfies a given threshold coefficient.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "pf/errors.hpp"
#include "pf/field_kernels.hpp"
#include "pf/hydrogen_dipole.hpp"
#include "pf/self_energy.hpp"

namespace pf {

inline constexpr int kMaxPhysicalCharge = 137;

enum class ThresholdBranch {
  ErrorVsCorrection,   ///< R_C > err decides
  AprioriConstraint,   ///< alpha <= a pi / (4 lambda) decides
};

struct ThresholdReport {
  double alpha_max = 0.0;
  ThresholdBranch branch = ThresholdBranch::ErrorVsCorrection;
  /// alpha_max / (beta Z)^2, only on the ErrorVsCorrection branch.
  std::optional<double> coefficient;
  double a_used = 0.5;
  std::optional<int> z_min;
};

/// min{ (16 pi / 15) e0 ln(1 + lambda) / (28 lambda^2 (1 + lambda^2) / (3 pi^2 (1 - a)) + 7 lambda^2 / pi^2),
///      a pi / (4 lambda) }
inline ThresholdReport alpha_max(const HydrogenModel& model, double lambda, double a) {
  detail::require_positive_cutoff(lambda);
  if (!(a > 0.0 && a < 1.0)) throw ArgumentError("a must lie in (0, 1)");

  const double l2 = lambda * lambda;
  const double pi2 = kPi * kPi;
  const double half_envelope = 28.0 * l2 * (1.0 + l2) / (3.0 * pi2 * (1.0 - a)) + 7.0 * l2 / pi2;
  const double correction_branch = (16.0 * kPi / 15.0) * model.e0() * std::log1p(lambda) / half_envelope;
  const double apriori_branch = a * kPi / (4.0 * lambda);

  ThresholdReport report;
  report.a_used = a;
  if (correction_branch <= apriori_branch) {
    report.alpha_max = correction_branch;
    report.branch = ThresholdBranch::ErrorVsCorrection;
    const double bz = model.beta() * model.z();
    report.coefficient = correction_branch / (bz * bz);
  } else {
    report.alpha_max = apriori_branch;
    report.branch = ThresholdBranch::AprioriConstraint;
  }
  return report;
}

struct ScanRow {
  double a = 0.0;
  double alpha_max = 0.0;
  std::optional<double> coefficient;
  ThresholdBranch branch = ThresholdBranch::ErrorVsCorrection;
};

struct CoefficientScan {
  std::vector<ScanRow> rows;  ///< ascending in a
  std::size_t best = 0;       ///< row with the largest alpha_max
};

/// alpha_max over a grid of splitting parameters a, sorted ascending.
inline CoefficientScan coefficient_scan(const HydrogenModel& model, double lambda,
                                        std::span<const double> grid) {
  if (grid.empty()) throw ArgumentError("a-grid must be nonempty");
  std::vector<double> sorted(grid.begin(), grid.end());
  std::sort(sorted.begin(), sorted.end());

  CoefficientScan scan;
  scan.rows.reserve(sorted.size());
  for (double a : sorted) {
    const ThresholdReport r = alpha_max(model, lambda, a);
    scan.rows.push_back({a, r.alpha_max, r.coefficient, r.branch});
    if (r.alpha_max > scan.rows[scan.best].alpha_max) scan.best = scan.rows.size() - 1;
  }
  return scan;
}

/// Uniform grid first, first + step, ... up to last (inclusive, within rounding).
inline std::vector<double> uniform_grid(double first, double last, double step) {
  if (!(step > 0.0) || last < first) throw ArgumentError("grid needs step > 0 and last >= first");
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9)) + 1;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid.push_back(first + static_cast<double>(i) * step);
  return grid;
}

/// Smallest charge Z in 1..137 with alpha <= coefficient (beta Z)^2, or
/// nullopt if no physical charge qualifies.
inline std::optional<int> z_min(double beta, double alpha, double coefficient) {
  if (!(beta > 0.0) || !(alpha > 0.0) || !(coefficient > 0.0))
    throw ArgumentError("z_min requires beta, alpha and coefficient > 0");
  auto satisfied = [&](int z) {
    const double bz = beta * z;
    return alpha <= coefficient * bz * bz;
  };
  const double estimate = std::ceil(std::sqrt(alpha / coefficient) / beta);
  int z = std::isfinite(estimate)
              ? static_cast<int>(std::clamp(estimate, 1.0, double(kMaxPhysicalCharge + 1)))
              : 1;
  // settle rounding at the boundary
  while (z > 1 && satisfied(z - 1)) --z;
  while (z <= kMaxPhysicalCharge && !satisfied(z)) ++z;
  if (z > kMaxPhysicalCharge) return std::nullopt;
  return z;
}

struct EnhancementCertificate {
  bool enhanced = false;
  double margin = 0.0;  ///< R_C - err
  double radiative_correction = 0.0;
  double error_envelope = 0.0;
};

/// Certifies enhanced binding when the approximate radiative correction
/// exceeds the self-energy error envelope. Requires alpha <= a pi / (4 lambda).
inline EnhancementCertificate enhancement_certificate(const HydrogenModel& model,
                                                      const FieldParams& params) {
  require_admissible(params);
  const double rc = radiative_correction(model, params, RadiativeMode::approx());
  const double err = err_envelope(params);
  return {rc > err, rc - err, rc, err};
}

}  // namespace pf
