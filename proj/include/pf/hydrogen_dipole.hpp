#pragma once

// Hydrogenic data behind the radiative correction to binding: level
// energies, ground-state kinetic energy, dipole overlaps c_n with the
// (n, l=1, m=0) states, and the correction itself, either through the
// textbook sum-rule shortcut or through an explicit bound-state sum.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "pf/errors.hpp"
#include "pf/field_kernels.hpp"
#include "pf/numerics.hpp"

namespace pf {

inline constexpr double kPhysicalBeta = 1.0 / 137.0;
inline constexpr double kSumRuleTarget = 2.0 / 15.0;

/// Electron in the Coulomb field -beta Z / r, kinetic energy p^2 (mass 1/2).
class HydrogenModel {
public:
  explicit HydrogenModel(int z, double beta = kPhysicalBeta) : z_(z), beta_(beta) {
    if (z < 1) throw ArgumentError("nuclear charge Z must be >= 1");
    if (!std::isfinite(beta) || !(beta > 0.0)) throw ArgumentError("beta must be > 0");
  }

  int z() const noexcept { return z_; }
  double beta() const noexcept { return beta_; }

  /// Ground-state binding energy (beta Z)^2 / 4.
  double e0() const noexcept {
    const double bz = beta_ * z_;
    return 0.25 * bz * bz;
  }

  /// ||p phi||^2 for the ground state; equals e0 by the virial theorem.
  double p_phi_sq() const noexcept { return e0(); }

  /// Length scale of the ground state phi ~ exp(-r / a), a = 2 / (beta Z).
  double bohr_radius() const noexcept { return 2.0 / (beta_ * z_); }

private:
  int z_;
  double beta_;
};

/// Binding energy of level n, e0 / n^2.
inline double level_energy(const HydrogenModel& model, int n) {
  if (n < 1) throw ArgumentError("principal quantum number must be >= 1");
  return model.e0() / (static_cast<double>(n) * n);
}

/// Normalized hydrogenic radial function R_nl(r) for Bohr radius a.
inline double radial_wavefunction(int n, int l, double r, double a) {
  if (n < 1 || l < 0 || l >= n) throw ArgumentError("radial function requires 0 <= l < n");
  const double rho = 2.0 * r / (n * a);
  const double scale = 2.0 / (n * a);
  const double log_norm =
      1.5 * std::log(scale) +
      0.5 * (std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1.0));
  return std::exp(log_norm - 0.5 * rho) * std::pow(rho, l) *
         std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1),
                             rho);
}

/// c_n = int phi_n1^* phi cos(theta) r^2 dr dOmega
///     = (1/sqrt 3) int_0^inf R_n1(r) R_10(r) r^2 dr.
/// Independent of Z: the Bohr radius drops out of the overlap.
inline double dipole_coefficient(const HydrogenModel& model, int n) {
  if (n < 2) throw ArgumentError("dipole coefficient needs n >= 2 (no 1p state)");
  const double a = model.bohr_radius();
  auto integrand = [&](double r) {
    return radial_wavefunction(n, 1, r, a) * radial_wavefunction(1, 0, r, a) * r * r;
  };

  // Extend the range until the tail, which decays at least as fast as
  // exp(-r/a), is below 1e-14 relative to the unit-normalized overlap.
  double r_max = 30.0 * a;
  while (a * std::max(std::abs(integrand(r_max)), std::abs(integrand(1.05 * r_max))) > 1e-16)
    r_max += 5.0 * a;

  // Phases are fixed so that every c_n is real and nonnegative.
  const double overlap = integrate(integrand, {0.0, r_max}, 1e-12).value;
  return std::abs(overlap) / std::sqrt(3.0);
}

struct DipoleTerm {
  int n = 2;
  double c = 0.0;
};

struct DipoleSpectrum {
  std::vector<DipoleTerm> coefficients;
  double partial_sum = 0.0;
  double target = kSumRuleTarget;
};

/// Accumulates |c_n|^2 for n = 2 .. n_max.
inline DipoleSpectrum sum_rule_partial(const HydrogenModel& model, int n_max) {
  if (n_max < 2) throw ArgumentError("n_max must be >= 2");
  DipoleSpectrum spectrum;
  spectrum.coefficients.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) {
    const double c = dipole_coefficient(model, n);
    spectrum.coefficients.push_back({n, c});
    spectrum.partial_sum += c * c;
  }
  return spectrum;
}

/// int_0^lambda p / (gap + p^2 + p) dp, with gap = e0 - e_n >= 0.
inline double excitation_integral(double lambda, double gap) {
  detail::require_positive_cutoff(lambda);
  if (!std::isfinite(gap) || gap < 0.0) throw ArgumentError("excitation gap must be >= 0");
  return integrate([gap](double p) { return p / (gap + p * p + p); }, {0.0, lambda}, 1e-12).value;
}

struct SpectralTerm {
  double weight = 0.0;  ///< |c_n|^2
  double gap = 0.0;     ///< e0 - e_n
};

/// 4 alpha * 4 pi e0 * sum_n |c_n|^2 int_0^lambda p / (gap_n + p^2 + p) dp.
inline double radiative_correction_from_terms(double e0, const FieldParams& params,
                                              std::span<const SpectralTerm> terms) {
  params.validate();
  double sum = 0.0;
  for (const auto& t : terms) sum += t.weight * excitation_integral(params.lambda, t.gap);
  return 16.0 * kPi * params.alpha * e0 * sum;
}

struct RadiativeMode {
  enum class Kind { Approx, Spectral };
  Kind kind = Kind::Approx;
  int n_max = 0;

  static constexpr RadiativeMode approx() { return {Kind::Approx, 0}; }
  static constexpr RadiativeMode spectral(int n_max) { return {Kind::Spectral, n_max}; }
};

/// Radiative correction R_C to the binding energy.
/// Approx: alpha e0 (32 pi / 15) ln(1 + lambda), i.e. sum |c|^2 frozen at 2/15
/// and each excitation integral replaced by ln(1 + lambda).
/// Spectral: the bound-state sum n = 2 .. n_max with the exact gaps.
inline double radiative_correction(const HydrogenModel& model, const FieldParams& params,
                                   RadiativeMode mode) {
  params.validate();
  if (mode.kind == RadiativeMode::Kind::Approx)
    return params.alpha * model.e0() * (32.0 * kPi / 15.0) * std::log1p(params.lambda);

  const DipoleSpectrum spectrum = sum_rule_partial(model, mode.n_max);
  std::vector<SpectralTerm> terms;
  terms.reserve(spectrum.coefficients.size());
  for (const auto& [n, c] : spectrum.coefficients)
    terms.push_back({c * c, model.e0() - level_energy(model, n)});
  return radiative_correction_from_terms(model.e0(), params, terms);
}

/// Upper bound ||p phi||^2 (32 pi / 3) ln(1 + lambda) on the order-alpha
/// binding gain, for any ground state with the given kinetic energy.
inline double binding_gain_upper(double p_phi_sq, double lambda) {
  detail::require_positive_cutoff(lambda);
  if (!(p_phi_sq >= 0.0)) throw ArgumentError("||p phi||^2 must be >= 0");
  return p_phi_sq * (32.0 * kPi / 3.0) * std::log1p(lambda);
}

inline double binding_gain_upper(const HydrogenModel& model, const FieldParams& params) {
  params.validate();
  return binding_gain_upper(model.p_phi_sq(), params.lambda);
}

}  // namespace pf
