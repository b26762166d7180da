#pragma once

// Gauss hypergeometric function F(a, b; c; x) on |x| < 1, its derivative,
// the three near-x=1 regimes, and residuals of the contiguous and
// differentiation relations used to derive the coefficient recurrences.

#include <cstddef>
#include <string>
#include <utility>

#include "hyprec/errors.hpp"
#include "hyprec/numeric.hpp"

namespace hyprec {

/// Parameters (a, b; c) of F. c must not be 0, -1, -2, ...
template <class T>
struct BasicHypParams {
  T a;
  T b;
  T c;
};

using HypParams = BasicHypParams<double>;
using RationalHypParams = BasicHypParams<Rational>;

/// Throws DomainError when c is a nonpositive integer.
template <class T>
void validate(const BasicHypParams<T>& params) {
  if (is_nonpositive_integer(params.c)) {
    throw DomainError("hypergeometric parameter c must not be 0, -1, -2, ...; got c = " +
                      format_value(params.c));
  }
}

/// A series value with its a-posteriori truncation bound.
struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms_used = 1;
};

namespace hypergeom {

inline constexpr std::size_t kDefaultTermCap = 100000;

/// Sums the defining series. Stops after three consecutive terms with
/// |term| <= tol |sum| while the term ratio stays below one in magnitude and
/// the geometric tail bound is within tol. A nonpositive integer a or b
/// terminates the series and yields error_bound = 0.
///
/// Throws DomainError for |x| >= 1 or invalid c, NonConvergence when the
/// criterion is not met within term_cap terms.
EvalResult hyp2f1(const HypParams& params, double x, double tol,
                  std::size_t term_cap = kDefaultTermCap);

/// F'(a, b; c; x) = (ab / c) F(a+1, b+1; c+1; x).
EvalResult hyp2f1_derivative(const HypParams& params, double x, double tol,
                             std::size_t term_cap = kDefaultTermCap);

/// F(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) for
/// c > a + b. The Gamma arguments c, c-a, c-b must also be positive.
double gauss_value_at_one(const HypParams& params);

/// Leading behaviour (R(a,b) - ln(1-x)) / B(a,b) of the zero-balanced
/// F(a, b; a+b; x) as x -> 1.
double zero_balanced_asymptote(double a, double b, double x);

/// Evaluates (1-x)^(c-a-b) F(c-a, c-b; c; x), which equals F(a, b; c; x).
EvalResult euler_transform_eval(const HypParams& params, double x, double tol,
                                std::size_t term_cap = kDefaultTermCap);

/// (c-a) F(a-1) + (2a - c - ax + bx) F + a (x-1) F(a+1); zero in exact
/// arithmetic.
double contiguous_residual(const HypParams& params, double x, double tol,
                           std::size_t term_cap = kDefaultTermCap);

/// Residuals (lhs - rhs) of
///   dF/dx     = ((c-a) F(a-1) + (a-c+bx) F) / (x (1-x)),
///   dF(a-1)/dx = (a-1)/x (F - F(a-1)),
/// with the left sides taken from the differentiation formula. Requires
/// 0 < |x| < 1.
std::pair<double, double> df_relation_residuals(const HypParams& params, double x,
                                                double tol,
                                                std::size_t term_cap = kDefaultTermCap);

}  // namespace hypergeom
}  // namespace hyprec
