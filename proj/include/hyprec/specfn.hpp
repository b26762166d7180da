#pragma once

// Gamma-family special functions on the positive real axis, plus the
// Pochhammer symbol over any field.

#include <numbers>

#include "hyprec/numeric.hpp"

namespace hyprec::specfn {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

/// Rising factorial (a)_n = a (a+1) ... (a+n-1). (a)_0 = 1 for every a,
/// including a = 0.
template <class T>
T pochhammer(const T& a, unsigned n) {
  T result(1);
  for (unsigned k = 0; k < n; ++k) result *= a + T(k);
  return result;
}

/// (a)_n / n!, accumulated factor by factor so that large n neither
/// overflows nor loses the ratio to inf/inf.
template <class T>
T pochhammer_over_factorial(const T& a, unsigned n) {
  T result(1);
  for (unsigned k = 0; k < n; ++k) {
    result *= a + T(k);
    result /= T(k + 1);
  }
  return result;
}

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// psi(x) = Gamma'(x) / Gamma(x) for x > 0.
double digamma(double x);

/// B(z, w) = Gamma(z) Gamma(w) / Gamma(z + w) for z, w > 0; symmetric in
/// its arguments bit for bit.
double beta(double z, double w);

/// R(a, b) = -2 gamma - psi(a) - psi(b), the constant governing the
/// logarithmic singularity of the zero-balanced F(a, b; a+b; x) at x = 1.
double r_zero_balanced(double a, double b);

}  // namespace hyprec::specfn
