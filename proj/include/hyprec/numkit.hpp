#pragma once

#include <cstddef>
#include <functional>

namespace hyprec::numkit {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr double kDefaultQuadTol = 1e-13;

/// Integral of f(s) s^(b-1) (1-s)^(b-1) over (0, 1), b > 0.
///
/// Gauss-Jacobi rules for the weight ((1-u)(1+u))^(b-1) on (-1, 1) after
/// s = (1+u)/2, doubling the order from 16 until two successive rules agree
/// within tol (relative to max(1, |value|)). f is never evaluated at 0 or 1.
/// Throws NonConvergence past order 2048.
QuadResult weighted_quad(const std::function<double(double)>& f, double b,
                         double tol = kDefaultQuadTol);

/// Richardson-extrapolated central difference of f at x. The tableau starts
/// at step h0 and halves it `levels - 1` times, so f is sampled on
/// [x - h0, x + h0].
double central_diff(const std::function<double(double)>& f, double x, double h0,
                    int levels = 3);

}  // namespace hyprec::numkit
