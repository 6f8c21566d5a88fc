#pragma once

// Photon form factors under a sharp ultraviolet cutoff and the closed-form
// field integrals built from them. Units: hbar = c = 1, electron mass 1/2,
// so momenta are measured in units of 2mc and energies in units of 2mc^2.
//
// Spin and photon polarization never appear explicitly: all quantities are
// polarization-summed densities
//   |G(k)|^2 = chi(k) / (2 pi^2 k),   |H(k)|^2 = chi(k) k / (2 pi^2),
// with chi(k) = 1 for k <= lambda and 0 otherwise. Three-dimensional
// momentum integrals are reduced to radial ones with the 4 pi k^2 measure.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "pf/errors.hpp"
#include "pf/numerics.hpp"

namespace pf {

inline constexpr double kPi = std::numbers::pi;

/// Coupling alpha, cutoff lambda and the splitting parameter a of the
/// kinetic-energy estimate.
struct FieldParams {
  double alpha = 0.0;
  double lambda = 0.25;
  double a = 0.5;

  void validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) throw ArgumentError("alpha must be >= 0");
    if (!std::isfinite(lambda) || !(lambda > 0.0)) throw ArgumentError("lambda must be > 0");
    if (!(a > 0.0 && a < 1.0)) throw ArgumentError("a must lie in (0, 1)");
  }
};

enum class ProfileKind { GSquared, HSquared };

struct RadialProfile {
  ProfileKind kind = ProfileKind::GSquared;
  double lambda = 1.0;
};

namespace detail {

inline void require_positive_cutoff(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 0.0)) throw ArgumentError("lambda must be > 0");
}

// lambda - ln(1 + lambda) without cancellation for small lambda.
inline double lambda_minus_log1p(double lambda) {
  if (std::abs(lambda) < 0.05) {
    // sum_{n>=2} (-1)^n lambda^n / n
    double term = lambda * lambda;
    double sum = 0.0;
    for (int n = 2; n < 40; ++n) {
      sum += (n % 2 == 0 ? 1.0 : -1.0) * term / n;
      term *= lambda;
    }
    return sum;
  }
  return lambda - std::log1p(lambda);
}

inline int levi_civita(int i, int j, int k) {
  // indices are 0-based
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace detail

/// Polarization-summed squared form factor at |k| = k.
inline double profile_value(const RadialProfile& p, double k) {
  detail::require_positive_cutoff(p.lambda);
  if (!(k >= 0.0)) throw ArgumentError("momentum magnitude must be >= 0");
  if (k > p.lambda) return 0.0;
  switch (p.kind) {
    case ProfileKind::GSquared:
      // removable at k = 0 under the k^2 measure
      return k == 0.0 ? 0.0 : 1.0 / (2.0 * kPi * kPi * k);
    case ProfileKind::HSquared:
      return k / (2.0 * kPi * kPi);
  }
  return 0.0;
}

/// <0| E (p^2 + H_f)^{-1} E^* |0> = (lambda^2 - 2 (lambda - ln(1 + lambda))) / pi.
inline double e_field_integral(double lambda) {
  detail::require_positive_cutoff(lambda);
  return (lambda * lambda - 2.0 * detail::lambda_minus_log1p(lambda)) / kPi;
}

/// [D, D^*] = lambda^2 / pi.
inline double dd_commutator(double lambda) {
  detail::require_positive_cutoff(lambda);
  return lambda * lambda / kPi;
}

/// Quadrature of |H|^2 / (k^2 + k) over the ball of radius lambda.
inline QuadResult e_field_integral_quadrature(double lambda, double rel_tol = kDefaultRelTol) {
  detail::require_positive_cutoff(lambda);
  const RadialProfile h{ProfileKind::HSquared, lambda};
  return integrate(
      [&](double k) { return 4.0 * kPi * k * k * profile_value(h, k) / (k * k + k); },
      {0.0, lambda}, rel_tol);
}

/// Quadrature of |G|^2 over the ball of radius lambda.
inline QuadResult dd_commutator_quadrature(double lambda, double rel_tol = kDefaultRelTol) {
  detail::require_positive_cutoff(lambda);
  const RadialProfile g{ProfileKind::GSquared, lambda};
  return integrate([&](double k) { return 4.0 * kPi * k * k * profile_value(g, k); },
                   {0.0, lambda}, rel_tol);
}

/// Imaginary coefficient of sum_lambda int G_i H_j / (k^2 + k) d^3k, with axes
/// i, j in {1, 2, 3}. After the polarization sum this is
///   int_0^lambda k/(k+1) dk * sum_{l,n} int [delta_il - khat_i khat_l] eps_jln khat_n dOmega,
/// and both factors are evaluated by quadrature. The result is zero up to
/// rounding for every index pair.
inline double gh_cross_integral(double lambda, int i, int j) {
  detail::require_positive_cutoff(lambda);
  if (i < 1 || i > 3 || j < 1 || j > 3) throw ArgumentError("axis indices must be in {1, 2, 3}");
  const int ii = i - 1;
  const int jj = j - 1;

  const double radial =
      integrate([](double k) { return k / (k + 1.0); }, {0.0, lambda}).value;

  auto angular_density = [&](double theta, double phi) {
    const std::array<double, 3> khat = {std::sin(theta) * std::cos(phi),
                                        std::sin(theta) * std::sin(phi), std::cos(theta)};
    double sum = 0.0;
    for (int l = 0; l < 3; ++l) {
      const double projector = (ii == l ? 1.0 : 0.0) - khat[ii] * khat[l];
      for (int n = 0; n < 3; ++n) {
        const int eps = detail::levi_civita(jj, l, n);
        if (eps != 0) sum += projector * eps * khat[n];
      }
    }
    return sum;
  };

  // Absolute tolerances only: the exact value is zero.
  constexpr double kRel = 1e-3;
  constexpr double kAbs = 1e-13;
  const double angular =
      integrate(
          [&](double theta) {
            return std::sin(theta) *
                   integrate([&](double phi) { return angular_density(theta, phi); },
                             {0.0, 2.0 * kPi}, kRel, kAbs)
                       .value;
          },
          {0.0, kPi}, kRel, kAbs)
          .value;
  return radial * angular;
}

/// Operators bounded relative to H_f on one-photon states. DstarD and EstarE
/// pair the form factor with the amplitude itself; the "norm" variants pair
/// |form factor| with |amplitude|.
enum class InequalityKind { DstarD, EstarE, NormD, NormE };

/// Scalar one-photon amplitude psi(|k|) supported on [0, support].
struct OnePhotonAmplitude {
  std::function<double(double)> radial;
  double support = 1.0;
};

/// Constant c in X^* X <= c H_f on one-photon states:
/// 2 lambda / pi for D-type, 2 lambda^3 / (3 pi) for E-type.
inline double operator_inequality_bound(InequalityKind kind, double lambda) {
  detail::require_positive_cutoff(lambda);
  switch (kind) {
    case InequalityKind::DstarD:
    case InequalityKind::NormD:
      return 2.0 * lambda / kPi;
    case InequalityKind::EstarE:
    case InequalityKind::NormE:
      return 2.0 * lambda * lambda * lambda / (3.0 * kPi);
  }
  return 0.0;
}

inline RadialProfile inequality_profile(InequalityKind kind, double lambda) {
  const bool d_type = kind == InequalityKind::DstarD || kind == InequalityKind::NormD;
  return {d_type ? ProfileKind::GSquared : ProfileKind::HSquared, lambda};
}

/// <psi| X^* X |psi> / <psi| H_f |psi> for a one-photon amplitude, where
/// <psi| X^* X |psi> = (4 pi int x(k) psi(k) k^2 dk)^2 with x = sqrt(profile)
/// and <psi| H_f |psi> = 4 pi int k |psi(k)|^2 k^2 dk.
inline double operator_inequality_ratio(InequalityKind kind, const OnePhotonAmplitude& psi,
                                        double lambda) {
  detail::require_positive_cutoff(lambda);
  if (!(psi.support > 0.0) || !std::isfinite(psi.support))
    throw ArgumentError("amplitude support must be a positive finite radius");

  const RadialProfile profile = inequality_profile(kind, lambda);
  const bool use_norm = kind == InequalityKind::NormD || kind == InequalityKind::NormE;

  const double overlap_range = std::min(lambda, psi.support);
  const double overlap =
      4.0 * kPi *
      integrate(
          [&](double k) {
            const double x = std::sqrt(profile_value(profile, k));
            const double amp = psi.radial(k);
            return (use_norm ? x * std::abs(amp) : x * amp) * k * k;
          },
          {0.0, overlap_range})
          .value;

  const double field_energy =
      4.0 * kPi *
      integrate(
          [&](double k) {
            const double amp = psi.radial(k);
            return k * amp * amp * k * k;
          },
          {0.0, psi.support})
          .value;

  if (!(field_energy > 0.0))
    throw DivisionError("one-photon state has zero field energy <psi|H_f|psi>");
  return overlap * overlap / field_energy;
}

/// Amplitude saturating the Cauchy-Schwarz step, psi(k) = sqrt(profile(k)) / k.
inline OnePhotonAmplitude extremal_amplitude(InequalityKind kind, double lambda) {
  detail::require_positive_cutoff(lambda);
  const RadialProfile profile = inequality_profile(kind, lambda);
  return {[profile](double k) { return std::sqrt(profile_value(profile, k)) / k; }, lambda};
}

}  // namespace pf
