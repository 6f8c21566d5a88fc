#pragma once

// Adaptive Gauss-Kronrod quadrature and bracketed root finding.
//
// Every closed form in the library is checked against these routines, so
// they depend on nothing but the standard library.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdio>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pf/errors.hpp"

namespace pf {

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr double kDefaultAbsTol = 1e-14;
inline constexpr int kDefaultSubdivisionBudget = 4000;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }

  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw ArgumentError("interval endpoints must be finite");
    if (lo > hi) throw ArgumentError("interval requires lo <= hi");
  }
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 1;
};

template <class F>
concept RealFunction = std::regular_invocable<F, double> &&
    std::convertible_to<std::invoke_result_t<F, double>, double>;

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15 nodes).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
};

template <RealFunction F>
Panel gauss_kronrod_15(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  auto eval = [&](double x) {
    const double y = static_cast<double>(f(x));
    if (!std::isfinite(y))
      throw QuadratureError("integrand is not finite at x = " + format_double(x),
                            std::numeric_limits<double>::quiet_NaN(), x);
    return y;
  };

  const double fc = eval(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double sum = eval(centre - dx) + eval(centre + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;

  // Round-off floor: the estimate can never be smaller than what the
  // arithmetic can resolve on this panel.
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(kronrod);
  return {lo, hi, kronrod, std::max(std::abs(kronrod - gauss), roundoff)};
}

}  // namespace detail

/// Globally adaptive G7/K15 quadrature of `f` over `range`.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate falls below max(abs_tol, rel_tol * |value|). Throws
/// QuadratureError when the budget is exhausted (best estimate attached) or
/// when `f` returns a non-finite value (abscissa attached).
template <RealFunction F>
QuadResult integrate(F&& f, Interval range, double rel_tol = kDefaultRelTol,
                     double abs_tol = kDefaultAbsTol,
                     int max_subdivisions = kDefaultSubdivisionBudget) {
  range.validate();
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw ArgumentError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw ArgumentError("subdivision budget must be >= 1");
  if (range.lo == range.hi) return {0.0, 0.0, 1};

  auto by_error = [](const detail::Panel& a, const detail::Panel& b) {
    return a.error < b.error;
  };

  std::vector<detail::Panel> heap;
  heap.reserve(static_cast<std::size_t>(max_subdivisions) + 1);
  heap.push_back(detail::gauss_kronrod_15(f, range.lo, range.hi));
  double value = heap.front().value;
  double error = heap.front().error;
  int panels = 1;

  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (panels >= max_subdivisions)
      throw QuadratureError("quadrature did not converge within " +
                                std::to_string(max_subdivisions) +
                                " subdivisions; best estimate " + detail::format_double(value),
                            value);
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi))
      throw QuadratureError("quadrature panel collapsed to machine precision near x = " +
                                detail::format_double(mid),
                            value);

    const auto left = detail::gauss_kronrod_15(f, worst.lo, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.hi);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }

  // Re-sum in abscissa order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](const detail::Panel& a, const detail::Panel& b) { return a.lo < b.lo; });
  value = 0.0;
  error = 0.0;
  for (const auto& p : heap) {
    value += p.value;
    error += p.error;
  }
  return {value, error, panels};
}

/// Bisects `bracket` down to width <= tol (or until floating point can no
/// longer split it) and returns the final bracket, which always contains a
/// sign change of `g`.
template <RealFunction G>
Interval bracket_root(G&& g, Interval bracket, double tol) {
  bracket.validate();
  if (!(tol > 0.0)) throw ArgumentError("root tolerance must be positive");

  double g_lo = g(bracket.lo);
  const double g_hi = g(bracket.hi);
  if (std::isnan(g_lo) || std::isnan(g_hi)) throw BracketError("function is NaN at bracket end");
  if (g_lo == 0.0) return {bracket.lo, bracket.lo};
  if (g_hi == 0.0) return {bracket.hi, bracket.hi};
  if (std::signbit(g_lo) == std::signbit(g_hi))
    throw BracketError("no sign change on [" + detail::format_double(bracket.lo) + ", " +
                       detail::format_double(bracket.hi) + "]");

  double lo = bracket.lo;
  double hi = bracket.hi;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return {mid, mid};
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

/// Root of `g` in `bracket`; midpoint of the bracket returned by bracket_root.
template <RealFunction G>
double find_root(G&& g, Interval bracket, double tol) {
  return bracket_root(std::forward<G>(g), bracket, tol).midpoint();
}

}  // namespace pf
