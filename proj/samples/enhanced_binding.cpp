// For each nuclear charge, compare the radiative gain in binding energy with
// the self-energy error envelope, and report where the gain wins.

#include <cstdio>

#include "pf/threshold.hpp"

int main() {
  const pf::FieldParams params{pf::kPhysicalBeta, 0.25, 0.642};

  std::printf("alpha = %.6g, lambda = %.3g, a = %.3g\n", params.alpha, params.lambda, params.a);
  std::printf("%4s  %14s  %14s  %14s  %s\n", "Z", "R_C", "err_envelope", "margin", "enhanced");
  for (int z : {1, 2, 5, 10, 12, 13, 14, 20, 50, 100}) {
    const auto cert = pf::enhancement_certificate(pf::HydrogenModel(z), params);
    std::printf("%4d  %14.6e  %14.6e  %14.6e  %s\n", z, cert.radiative_correction, cert.error_envelope,
                cert.margin, cert.enhanced ? "yes" : "no");
  }

  const auto rep = pf::alpha_max(pf::HydrogenModel(13), params.lambda, params.a);
  if (rep.coefficient) {
    const auto z = pf::z_min(pf::kPhysicalBeta, params.alpha, *rep.coefficient);
    std::printf("alpha <= %.4f (beta Z)^2, so binding is certified from Z = %d\n", *rep.coefficient,
                z ? *z : -1);
  }
  return 0;
}
