#include "hyprec/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyprec/errors.hpp"
#include "hyprec/specfn.hpp"

namespace hyprec::hypergeom {

namespace {

void require_unit_disc(double x, const char* what) {
  if (!(std::fabs(x) < 1.0)) {
    throw DomainError(std::string(what) + ": requires |x| < 1, got x = " + format_double(x));
  }
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

// Number of consecutive small terms required before stopping.
constexpr int kQuietTerms = 3;

}  // namespace

EvalResult hyp2f1(const HypParams& params, double x, double tol, std::size_t term_cap) {
  validate(params);
  require_unit_disc(x, "hyp2f1");
  require_tolerance(tol);

  const auto [a, b, c] = params;
  EvalResult result;
  result.value = 1.0;
  double term = 1.0;
  int quiet = 0;

  for (std::size_t n = 0; n < term_cap; ++n) {
    const double k = static_cast<double>(n);
    const double upper = (a + k) * (b + k);
    if (upper == 0.0 || x == 0.0) {
      // Every later term carries the zero factor: the sum is a polynomial.
      result.error_bound = 0.0;
      return result;
    }
    const double ratio = upper / ((c + k) * (k + 1.0)) * x;
    term *= ratio;
    result.value += term;
    ++result.terms_used;

    const double rho = std::fabs(ratio);
    const double scale = std::fabs(result.value);
    quiet = (std::fabs(term) <= tol * scale && rho < 1.0) ? quiet + 1 : 0;
    if (quiet < kQuietTerms) continue;

    // The term ratio tends to x; bound the tail geometrically with the
    // larger of the observed ratio and its limit.
    const double rho_tail = std::max(rho, std::fabs(x));
    const double bound = std::fabs(term) * rho_tail / (1.0 - rho_tail);
    if (bound <= tol * scale) {
      result.error_bound = bound;
      return result;
    }
  }
  throw NonConvergence("hyp2f1: tail criterion not met within " + std::to_string(term_cap) +
                       " terms at x = " + format_double(x));
}

EvalResult hyp2f1_derivative(const HypParams& params, double x, double tol,
                             std::size_t term_cap) {
  validate(params);
  const double scale = params.a * params.b / params.c;
  if (scale == 0.0) {
    require_unit_disc(x, "hyp2f1_derivative");
    return EvalResult{0.0, 0.0, 1};
  }
  EvalResult shifted =
      hyp2f1({params.a + 1.0, params.b + 1.0, params.c + 1.0}, x, tol, term_cap);
  shifted.value *= scale;
  shifted.error_bound *= std::fabs(scale);
  return shifted;
}

double gauss_value_at_one(const HypParams& params) {
  validate(params);
  const auto [a, b, c] = params;
  const double excess = c - a - b;
  if (!(excess > 0.0)) {
    throw DomainError("gauss_value_at_one: requires c > a + b");
  }
  if (!(c > 0.0) || !(c - a > 0.0) || !(c - b > 0.0)) {
    throw DomainError("gauss_value_at_one: requires c, c - a, c - b > 0");
  }
  using specfn::ln_gamma;
  return std::exp((ln_gamma(c) - ln_gamma(c - a)) + (ln_gamma(excess) - ln_gamma(c - b)));
}

double zero_balanced_asymptote(double a, double b, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("zero_balanced_asymptote: requires 0 < x < 1");
  }
  return (specfn::r_zero_balanced(a, b) - std::log1p(-x)) / specfn::beta(a, b);
}

EvalResult euler_transform_eval(const HypParams& params, double x, double tol,
                                std::size_t term_cap) {
  validate(params);
  require_unit_disc(x, "euler_transform_eval");
  const auto [a, b, c] = params;
  EvalResult inner = hyp2f1({c - a, c - b, c}, x, tol, term_cap);
  const double weight = std::pow(1.0 - x, c - a - b);
  inner.value *= weight;
  inner.error_bound *= weight;
  return inner;
}

double contiguous_residual(const HypParams& params, double x, double tol,
                           std::size_t term_cap) {
  const auto [a, b, c] = params;
  const double lower = hyp2f1({a - 1.0, b, c}, x, tol, term_cap).value;
  const double mid = hyp2f1(params, x, tol, term_cap).value;
  const double upper = hyp2f1({a + 1.0, b, c}, x, tol, term_cap).value;
  return (c - a) * lower + (2.0 * a - c - a * x + b * x) * mid + a * (x - 1.0) * upper;
}

std::pair<double, double> df_relation_residuals(const HypParams& params, double x,
                                                double tol, std::size_t term_cap) {
  if (x == 0.0) throw DomainError("df_relation_residuals: requires x != 0");
  const auto [a, b, c] = params;
  const HypParams lowered{a - 1.0, b, c};

  const double f = hyp2f1(params, x, tol, term_cap).value;
  const double f_lower = hyp2f1(lowered, x, tol, term_cap).value;
  const double df = hyp2f1_derivative(params, x, tol, term_cap).value;
  const double df_lower = hyp2f1_derivative(lowered, x, tol, term_cap).value;

  const double first = df - ((c - a) * f_lower + (a - c + b * x) * f) / (x * (1.0 - x));
  const double second = df_lower - (a - 1.0) / x * (f - f_lower);
  return {first, second};
}

}  // namespace hyprec::hypergeom
