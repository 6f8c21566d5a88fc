#pragma once

// Self-energy of a free electron coupled to the cutoff photon field:
// the order-alpha leading term, the one-photon variational upper bound, the
// concrete order-alpha^2 error envelope, a-priori bounds on field and
// kinetic energy, and a secular-equation solver for the lowest eigenvalue
// of the vacuum + one-photon restriction at zero electron momentum.

#include <cmath>
#include <string>

#include "pf/errors.hpp"
#include "pf/field_kernels.hpp"
#include "pf/numerics.hpp"

namespace pf {

/// Largest coupling for which the kinetic-energy estimate closes:
/// alpha <= a pi / (4 lambda).
inline double admissible_alpha_bound(const FieldParams& params) {
  params.validate();
  return params.a * kPi / (4.0 * params.lambda);
}

/// Throws ConstraintError if alpha exceeds admissible_alpha_bound.
inline void require_admissible(const FieldParams& params) {
  const double bound = admissible_alpha_bound(params);
  if (params.alpha > bound)
    throw ConstraintError("alpha = " + detail::format_double(params.alpha) +
                              " violates alpha <= a*pi/(4*lambda) = " +
                              detail::format_double(bound),
                          bound);
}

/// 2 (alpha/pi) (lambda - ln(1 + lambda)).
inline double sigma_leading(const FieldParams& params) {
  params.validate();
  return 2.0 * params.alpha / kPi * detail::lambda_minus_log1p(params.lambda);
}

/// Leading term plus (2/pi^2) alpha^2 lambda^2 ln(1 + lambda).
inline double sigma_upper_bound(const FieldParams& params) {
  params.validate();
  const double al = params.alpha * params.lambda;
  return sigma_leading(params) + 2.0 / (kPi * kPi) * al * al * std::log1p(params.lambda);
}

/// alpha^2 [56 lambda^2 (1 + lambda^2) / (3 pi^2 (1 - a)) + 14 lambda^2 / pi^2],
/// valid with the field-splitting constant fixed at c = 2/pi.
inline double err_envelope(const FieldParams& params) {
  params.validate();
  const double l2 = params.lambda * params.lambda;
  const double pi2 = kPi * kPi;
  const double bracket = 56.0 * l2 * (1.0 + l2) / (3.0 * pi2 * (1.0 - params.a)) + 14.0 * l2 / pi2;
  return params.alpha * params.alpha * bracket;
}

struct AprioriBounds {
  double field = 0.0;    ///< bound on <H_f>
  double kinetic = 0.0;  ///< bound on ||p Psi||^2
};

/// A-priori bounds for an approximate ground state, lambda <= 1 form.
/// Throws ConstraintError when alpha > a pi / (4 lambda).
inline AprioriBounds apriori_bounds(const FieldParams& params) {
  require_admissible(params);
  const double al = params.alpha * params.lambda;
  return {2.0 * al / kPi,
          2.0 * al * (1.0 + params.lambda * params.lambda) / (kPi * (1.0 - params.a))};
}

inline constexpr double kSecularTol = 1e-16;

/// alpha (2/pi) int_0^lambda k^3 / (k^2 + k - shift) dk for shift <= 0, i.e.
/// alpha int |H(k)|^2 / (k^2 + k - shift) d^3k.
inline double secular_self_coupling(const FieldParams& params, double shift) {
  const RadialProfile h{ProfileKind::HSquared, params.lambda};
  const double integral =
      integrate(
          [&](double k) { return 4.0 * kPi * k * k * profile_value(h, k) / (k * k + k - shift); },
          {0.0, params.lambda}, 1e-12)
          .value;
  return params.alpha * integral;
}

/// Lowest eigenvalue of the Pauli-Fierz operator restricted to vacuum plus
/// one photon at zero electron momentum: alpha lambda^2 / pi + s, where s <= 0
/// solves s = -alpha int |H|^2 / (k^2 + k - s) d^3k.
///
/// The one-photon D^*D term does not shift this eigenvalue because G and H
/// are orthogonal under any radial weight, and the two-photon D^*D^* term is
/// outside the restriction.
inline double sigma_secular(const FieldParams& params, double tol = kSecularTol) {
  params.validate();
  if (params.alpha == 0.0) return 0.0;

  auto secular = [&](double shift) { return shift + secular_self_coupling(params, shift); };
  constexpr double kMargin = 0.25;
  const double lower = -params.alpha * e_field_integral(params.lambda) * (1.0 + kMargin);
  const double shift = find_root(secular, {lower, 0.0}, tol);
  return params.alpha * dd_commutator(params.lambda) + shift;
}

struct SelfEnergyReport {
  double leading = 0.0;
  double upper_bound = 0.0;
  double err_envelope = 0.0;
  double secular_value = 0.0;
  double kinetic_apriori = 0.0;
  double field_apriori = 0.0;
};

inline SelfEnergyReport self_energy_report(const FieldParams& params) {
  const AprioriBounds bounds = apriori_bounds(params);
  return {sigma_leading(params), sigma_upper_bound(params), err_envelope(params),
          sigma_secular(params), bounds.kinetic, bounds.field};
}

}  // namespace pf
