#pragma once

// Power-series coefficients of
//   U(x) = (1 - theta x)^p F(a, b; c; x)   and   V(x) = ln(1 - x) F(a, b; c; x)
// from short recurrences, together with the direct convolutions they are
// checked against. Every routine is generic over the field T and is
// instantiated for double and for exact rationals.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hyprec/errors.hpp"
#include "hyprec/hypergeom.hpp"
#include "hyprec/numeric.hpp"
#include "hyprec/specfn.hpp"

namespace hyprec {

/// (1 - theta x)^p F(a, b; c; x) with theta in [-1, 1].
template <class T>
struct BasicWeightedSeriesSpec {
  BasicHypParams<T> params;
  T p;
  T theta;
};

using WeightedSeriesSpec = BasicWeightedSeriesSpec<double>;
using RationalWeightedSeriesSpec = BasicWeightedSeriesSpec<Rational>;

enum class SeriesKind { Weighted, LogProduct };
enum class Method { Recurrence, CauchyOracle, ClosedForm };

std::string to_string(SeriesKind kind);
std::string to_string(Method method);

/// Coefficients u_0..u_N. For SeriesKind::LogProduct the spec carries the
/// hypergeometric parameters with p = 0 and theta = 1.
template <class T>
struct BasicCoeffSequence {
  SeriesKind kind = SeriesKind::Weighted;
  BasicWeightedSeriesSpec<T> spec;
  std::vector<T> coeffs;
  Method method = Method::Recurrence;
};

using CoeffSequence = BasicCoeffSequence<double>;
using RationalCoeffSequence = BasicCoeffSequence<Rational>;

namespace coeffrec {

inline constexpr std::size_t kMaxTerms = 10000;

template <class T>
void validate(const BasicWeightedSeriesSpec<T>& spec) {
  hyprec::validate(spec.params);
  if (spec.theta < T(-1) || spec.theta > T(1)) {
    throw DomainError("theta must lie in [-1, 1]; got " + format_value(spec.theta));
  }
}

namespace detail {

inline void check_length(std::size_t n) {
  if (n > kMaxTerms) {
    throw DomainError("coefficient count " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxTerms));
  }
}

template <class T>
T checked_divisor(const T& value, const char* what, std::size_t n) {
  if (is_zero(value)) {
    throw DomainError(std::string(what) + ": zero divisor at n = " + std::to_string(n));
  }
  return value;
}

template <class T>
BasicCoeffSequence<T> make_sequence(const BasicWeightedSeriesSpec<T>& spec, std::size_t n,
                                    Method method, SeriesKind kind = SeriesKind::Weighted) {
  BasicCoeffSequence<T> seq;
  seq.kind = kind;
  seq.spec = spec;
  seq.method = method;
  seq.coeffs.assign(n + 1, T(0));
  return seq;
}

}  // namespace detail

/// w_n = (a)_n (b)_n / (n! (c)_n), n = 0..N: the coefficients of F itself.
template <class T>
std::vector<T> hyp_coefficients(const BasicHypParams<T>& params, std::size_t N) {
  hyprec::validate(params);
  detail::check_length(N);
  std::vector<T> w(N + 1);
  w[0] = T(1);
  for (std::size_t n = 0; n < N; ++n) {
    const T k(static_cast<unsigned long>(n));
    w[n + 1] = w[n] * (params.a + k) * (params.b + k) / ((params.c + k) * (k + T(1)));
  }
  return w;
}

/// Coefficients of (1 - theta x)^p F(a, b; c; x) for general theta.
///
/// Seeds u_0 = 1, u_1 = ab/c - p theta and
///   u_2 = theta^2 p (p-1) / 2 - theta p ab/c + ab (a+1)(b+1) / (2 c (c+1));
/// for n >= 2 the third-order recurrence
///   (n+1)(n+c) u_{n+1} = xi_n u_n - theta eta_n u_{n-1} + theta^2 lambda_n u_{n-2}
/// with
///   xi_n     = (n+a)(n+b) + theta (2n^2 - 2n(p-c+1) - cp),
///   eta_n    = 2n^2 + 2(a+b-p-2) n - (a+b-1) p + 2(a-1)(b-1)
///              + theta (n-p-1)(n-p+c-2),
///   lambda_n = (n+a-p-2)(n+b-p-2).
/// The recurrence is applied for every theta and p, including theta (p+1) = 0.
template <class T>
BasicCoeffSequence<T> u_general(const BasicWeightedSeriesSpec<T>& spec, std::size_t N) {
  validate(spec);
  detail::check_length(N);
  const auto& [a, b, c] = spec.params;
  const T& p = spec.p;
  const T& theta = spec.theta;

  auto seq = detail::make_sequence(spec, N, Method::Recurrence);
  auto& u = seq.coeffs;
  const T ab_c = a * b / c;
  u[0] = T(1);
  if (N >= 1) u[1] = ab_c - p * theta;
  if (N >= 2) {
    u[2] = theta * theta * p * (p - T(1)) / T(2) - theta * p * ab_c +
           a * b * (a + T(1)) * (b + T(1)) / (T(2) * c * (c + T(1)));
  }
  for (std::size_t i = 2; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = detail::checked_divisor(T((n + T(1)) * (n + c)), "u_general", i);
    const T xi = (n + a) * (n + b) +
                 theta * (T(2) * n * n - T(2) * n * (p - c + T(1)) - c * p);
    const T eta = T(2) * n * n + T(2) * (a + b - p - T(2)) * n - (a + b - T(1)) * p +
                  T(2) * (a - T(1)) * (b - T(1)) +
                  theta * (n - p - T(1)) * (n - p + c - T(2));
    const T lambda = (n + a - p - T(2)) * (n + b - p - T(2));
    u[i + 1] = (xi * u[i] - theta * eta * u[i - 1] + theta * theta * lambda * u[i - 2]) / den;
  }
  return seq;
}

/// Coefficients of (1 + x)^p F(a, b; c; x), from the theta = -1
/// specialisation written out in its own closed coefficients:
///   xi_n     = -n^2 + (a+b-2c+2p+2) n + (ab + cp),
///   eta_n    = (n+2a+2b-c)(n-1) - p^2 - (a+b-c+2) p + 2ab,
///   lambda_n = (n+a-p-2)(n+b-p-2),
///   (n+1)(n+c) u_{n+1} = xi_n u_n + eta_n u_{n-1} + lambda_n u_{n-2}.
template <class T>
BasicCoeffSequence<T> u_theta_minus1(const BasicHypParams<T>& params, const T& p,
                                     std::size_t N) {
  const BasicWeightedSeriesSpec<T> spec{params, p, T(-1)};
  validate(spec);
  detail::check_length(N);
  const auto& [a, b, c] = params;

  auto seq = detail::make_sequence(spec, N, Method::Recurrence);
  auto& u = seq.coeffs;
  const T ab_c = a * b / c;
  u[0] = T(1);
  if (N >= 1) u[1] = ab_c + p;
  if (N >= 2) {
    u[2] = p * (p - T(1)) / T(2) + p * ab_c +
           a * b * (b + T(1)) * (a + T(1)) / (T(2) * c * (c + T(1)));
  }
  for (std::size_t i = 2; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = detail::checked_divisor(T((n + T(1)) * (n + c)), "u_theta_minus1", i);
    const T xi = -n * n + (a + b - T(2) * c + T(2) * p + T(2)) * n + (a * b + c * p);
    const T eta = (n + T(2) * a + T(2) * b - c) * (n - T(1)) - p * p -
                  (a + b - c + T(2)) * p + T(2) * a * b;
    const T lambda = (n + a - p - T(2)) * (n + b - p - T(2));
    u[i + 1] = (xi * u[i] + eta * u[i - 1] + lambda * u[i - 2]) / den;
  }
  return seq;
}

/// 2 alpha_n = (2n^2 + (a+b+c-2p-1) n + ab - cp) / ((n+1)(n+c)).
template <class T>
T two_alpha(const BasicHypParams<T>& params, const T& p, std::size_t i) {
  const auto& [a, b, c] = params;
  const T n(static_cast<unsigned long>(i));
  const T den = detail::checked_divisor(T((n + T(1)) * (n + c)), "alpha_n", i);
  return (T(2) * n * n + (a + b + c - T(2) * p - T(1)) * n + a * b - c * p) / den;
}

/// beta_n = (n+a-p-1)(n+b-p-1) / ((n+1)(n+c)).
template <class T>
T beta_coeff(const BasicHypParams<T>& params, const T& p, std::size_t i) {
  const auto& [a, b, c] = params;
  const T n(static_cast<unsigned long>(i));
  const T den = detail::checked_divisor(T((n + T(1)) * (n + c)), "beta_n", i);
  return (n + a - p - T(1)) * (n + b - p - T(1)) / den;
}

/// Coefficients of (1 - x)^p F(a, b; c; x) from the second-order recurrence
/// u_{n+1} = 2 alpha_n u_n - beta_n u_{n-1} (n >= 1), u_0 = 1, u_1 = ab/c - p.
template <class T>
BasicCoeffSequence<T> u_theta_plus1(const BasicHypParams<T>& params, const T& p,
                                    std::size_t N) {
  const BasicWeightedSeriesSpec<T> spec{params, p, T(1)};
  validate(spec);
  detail::check_length(N);
  auto seq = detail::make_sequence(spec, N, Method::Recurrence);
  auto& u = seq.coeffs;
  u[0] = T(1);
  if (N >= 1) u[1] = params.a * params.b / params.c - p;
  for (std::size_t n = 1; n < N; ++n) {
    u[n + 1] = two_alpha(params, p, n) * u[n] - beta_coeff(params, p, n) * u[n - 1];
  }
  return seq;
}

/// Coefficients of ln(1 - x) F(a, b; c; x):
///   v_{n+1} = 2 alpha_n v_n - beta_n v_{n-1} + gamma_n w_n   (n >= 1)
/// with alpha_n, beta_n at p = 0, v_0 = 0, v_1 = -1, and
///   gamma_n = ((c-a-b) n^2 + (a+b-2ab) n - c(a-1)(b-1))
///             / ((n+1)(n+a-1)(n+b-1)(n+c)).
/// Throws DomainError when n+a-1 or n+b-1 vanishes for some 1 <= n < N.
template <class T>
BasicCoeffSequence<T> v_log_product(const BasicHypParams<T>& params, std::size_t N) {
  const BasicWeightedSeriesSpec<T> spec{params, T(0), T(1)};
  validate(spec);
  detail::check_length(N);
  const auto& [a, b, c] = params;
  const std::vector<T> w = hyp_coefficients(params, N);

  auto seq = detail::make_sequence(spec, N, Method::Recurrence, SeriesKind::LogProduct);
  auto& v = seq.coeffs;
  v[0] = T(0);
  if (N >= 1) v[1] = T(-1);
  const T zero(0);
  for (std::size_t i = 1; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = detail::checked_divisor(
        T((n + T(1)) * (n + a - T(1)) * (n + b - T(1)) * (n + c)), "v_log_product", i);
    const T gamma =
        ((c - b - a) * n * n + (a + b - T(2) * a * b) * n - c * (a - T(1)) * (b - T(1))) / den;
    v[i + 1] = two_alpha(params, zero, i) * v[i] - beta_coeff(params, zero, i) * v[i - 1] +
               gamma * w[i];
  }
  return seq;
}

/// Ground truth by direct convolution:
///   u_n = sum_k w_k theta^(n-k) (-p)_(n-k) / (n-k)!.
template <class T>
BasicCoeffSequence<T> cauchy_oracle(const BasicWeightedSeriesSpec<T>& spec, std::size_t N) {
  validate(spec);
  detail::check_length(N);
  const std::vector<T> w = hyp_coefficients(spec.params, N);
  std::vector<T> weight(N + 1);
  T theta_power(1);
  const T minus_p = -spec.p;
  for (std::size_t j = 0; j <= N; ++j) {
    weight[j] = theta_power * specfn::pochhammer_over_factorial(minus_p, static_cast<unsigned>(j));
    theta_power *= spec.theta;
  }
  auto seq = detail::make_sequence(spec, N, Method::CauchyOracle);
  for (std::size_t n = 0; n <= N; ++n) {
    T sum(0);
    for (std::size_t k = 0; k <= n; ++k) sum += w[k] * weight[n - k];
    seq.coeffs[n] = sum;
  }
  return seq;
}

/// Ground truth for ln(1 - x) F: v_n = -sum_{k=1..n} w_{n-k} / k.
template <class T>
BasicCoeffSequence<T> log_convolution_oracle(const BasicHypParams<T>& params, std::size_t N) {
  const BasicWeightedSeriesSpec<T> spec{params, T(0), T(1)};
  validate(spec);
  const std::vector<T> w = hyp_coefficients(params, N);
  auto seq = detail::make_sequence(spec, N, Method::CauchyOracle, SeriesKind::LogProduct);
  for (std::size_t n = 1; n <= N; ++n) {
    T sum(0);
    for (std::size_t k = 1; k <= n; ++k) sum += w[n - k] / T(static_cast<unsigned long>(k));
    seq.coeffs[n] = -sum;
  }
  return seq;
}

/// Residuals u_{n+1} - theta u_n - w_{n+1}, n = 0..N-1, of the p = -1
/// identity, with u from u_general.
template <class T>
std::vector<T> p_minus1_identity_residual(const BasicHypParams<T>& params, const T& theta,
                                          std::size_t N) {
  const auto u = u_general(BasicWeightedSeriesSpec<T>{params, T(-1), theta}, N).coeffs;
  const auto w = hyp_coefficients(params, N);
  std::vector<T> residual(N);
  for (std::size_t n = 0; n < N; ++n) residual[n] = u[n + 1] - theta * u[n] - w[n + 1];
  return residual;
}

/// Residuals of the theta = 1 third-order recurrence evaluated on the
/// second-order sequence of u_theta_plus1, for n = 2..N-1 (index 0 is n=2).
template <class T>
std::vector<T> order_reduction_residual(const BasicHypParams<T>& params, const T& p,
                                        std::size_t N) {
  const auto u = u_theta_plus1(params, p, N).coeffs;
  const auto& [a, b, c] = params;
  std::vector<T> residual;
  for (std::size_t i = 2; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = (n + T(1)) * (n + c);
    const T xi = (n + a) * (n + b) + T(2) * n * n - T(2) * n * (p - c + T(1)) - c * p;
    const T eta = T(2) * n * n + T(2) * (a + b - p - T(2)) * n - (a + b - T(1)) * p +
                  T(2) * (a - T(1)) * (b - T(1)) + (n - p - T(1)) * (n - p + c - T(2));
    const T lambda = (n + a - p - T(2)) * (n + b - p - T(2));
    residual.push_back(u[i + 1] - (xi * u[i] - eta * u[i - 1] + lambda * u[i - 2]) / den);
  }
  return residual;
}

/// Side-by-side record for (1 - x)^(-q) F(-1/2, -1/2; 2; x): the sequence
/// produced by the historically published recurrence
///   u_0 = 1, u_1 = q - 1/8,
///   u_{n+1} = (2n^2 + (2q+1) n + 2q - 1/4) / ((n+1)(n+2)) u_n
///             - (n+q-1/2)(n+q-3/2) / ((n+1)(n+2)) u_{n-1},
/// and the convolution oracle for the same function.
template <class T>
struct Y2Comparison {
  BasicCoeffSequence<T> published;
  BasicCoeffSequence<T> oracle;
};

template <class T>
Y2Comparison<T> y2_regression(const T& q, std::size_t N) {
  if (N < 2) throw DomainError("y2_regression requires N >= 2");
  detail::check_length(N);
  const T half = T(1) / T(2);
  const BasicWeightedSeriesSpec<T> spec{{-half, -half, T(2)}, -q, T(1)};

  auto published = detail::make_sequence(spec, N, Method::Recurrence);
  auto& u = published.coeffs;
  u[0] = T(1);
  u[1] = q - T(1) / T(8);
  for (std::size_t i = 1; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = (n + T(1)) * (n + T(2));
    u[i + 1] = (T(2) * n * n + (T(2) * q + T(1)) * n + T(2) * q - T(1) / T(4)) / den * u[i] -
               (n + q - half) * (n + q - T(3) / T(2)) / den * u[i - 1];
  }
  return {std::move(published), cauchy_oracle(spec, N)};
}

/// Coefficients of (r')^p K(r) / (pi/2) and (r')^p E(r) / (pi/2) in powers
/// of x = r^2, where r' = sqrt(1 - r^2). They are (1-x)^(p/2) F(1/2, 1/2; 1; x)
/// and (1-x)^(p/2) F(-1/2, 1/2; 1; x), produced here by u_theta_plus1.
template <class T>
BasicCoeffSequence<T> y1_k_series(const T& p, std::size_t N) {
  const T half = T(1) / T(2);
  return u_theta_plus1(BasicHypParams<T>{half, half, T(1)}, T(p / T(2)), N);
}

template <class T>
BasicCoeffSequence<T> y1_e_series(const T& p, std::size_t N) {
  const T half = T(1) / T(2);
  return u_theta_plus1(BasicHypParams<T>{-half, half, T(1)}, T(p / T(2)), N);
}

/// The same two sequences from their published stand-alone recurrences:
///   a_0 = 1, a_1 = 1/4 - p/2,
///   a_n = (8n^2 - 4(p+3) n + 2p + 5) / (4n^2) a_{n-1} - (p-2n+3)^2 / (4n^2) a_{n-2};
///   b_0 = 1, b_1 = -p/2 - 1/4,
///   b_{n+1} = (8n^2 - 4pn - 2p - 1) / (4(n+1)^2) b_n
///             - (2n-p-1)(2n-p-3) / (4(n+1)^2) b_{n-1}.
template <class T>
std::vector<T> y1_k_published(const T& p, std::size_t N) {
  std::vector<T> a(N + 1, T(0));
  a[0] = T(1);
  if (N >= 1) a[1] = T(1) / T(4) - p / T(2);
  for (std::size_t i = 2; i <= N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = T(4) * n * n;
    const T shift = p - T(2) * n + T(3);
    a[i] = (T(8) * n * n - T(4) * (p + T(3)) * n + (T(2) * p + T(5))) / den * a[i - 1] -
           shift * shift / den * a[i - 2];
  }
  return a;
}

template <class T>
std::vector<T> y1_e_published(const T& p, std::size_t N) {
  std::vector<T> b(N + 1, T(0));
  b[0] = T(1);
  if (N >= 1) b[1] = -p / T(2) - T(1) / T(4);
  for (std::size_t i = 1; i < N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T den = T(4) * (n + T(1)) * (n + T(1));
    b[i + 1] = (T(8) * n * n - T(4) * p * n - T(2) * p - T(1)) / den * b[i] -
               (T(2) * n - p - T(1)) * (T(2) * n - p - T(3)) / den * b[i - 1];
  }
  return b;
}

/// Sum of coeffs[n] x^n (Horner). Convergence is the caller's concern.
template <class T>
T partial_sum(const BasicCoeffSequence<T>& seq, const T& x) {
  T sum(0);
  for (auto it = seq.coeffs.rbegin(); it != seq.coeffs.rend(); ++it) sum = sum * x + *it;
  return sum;
}

}  // namespace coeffrec
}  // namespace hyprec
