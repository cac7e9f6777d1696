#pragma once

#include <cmath>
#include <complex>

namespace photonkin {

/// exp(z) - 1 without cancellation for small |z|.
inline std::complex<double> expm1(std::complex<double> z) {
  const double a = z.real();
  const double b = z.imag();
  const double s = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * s * s;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

}  // namespace photonkin
