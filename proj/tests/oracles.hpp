#pragma once

// Test-only reference computations. Deliberately share no code with the
// library: fixed-step composite Simpson and closed-form antiderivatives.

#include <cmath>
#include <functional>
#include <numbers>

namespace pf::test {

inline constexpr double kPi = std::numbers::pi;

/// Composite Simpson rule on `panels` (even) equal subintervals.
inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      int panels = 1 << 14) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

/// Antiderivative of k^2 / (k + 1): k^2/2 - k + ln(1 + k).
inline double k2_over_k1_integral(double lambda) {
  return lambda * lambda / 2.0 - lambda + std::log1p(lambda);
}

/// (2/pi) int_0^lambda k^2/(k+1) dk.
inline double e_field_reference(double lambda) { return 2.0 / kPi * k2_over_k1_integral(lambda); }

}  // namespace pf::test
