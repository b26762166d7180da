#include "hyprec/numkit.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <vector>

#include "hyprec/errors.hpp"
#include "hyprec/numeric.hpp"
#include "hyprec/specfn.hpp"

namespace hyprec::numkit {

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch for the symmetric Jacobi weight (1-u)^alpha (1+u)^alpha,
// alpha = b - 1 > -1 (Gegenbauer). The Jacobi matrix has zero diagonal and
// off-diagonal sqrt(k (k + 2 alpha) / ((2k + 2 alpha)^2 - 1)) for k >= 1.
GaussRule gegenbauer_rule(int order, double alpha) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k) {
    const double kk = k;
    const double s = 2.0 * kk + 2.0 * alpha;
    sub(k - 1) = std::sqrt(kk * (kk + 2.0 * alpha) / (s * s - 1.0));
  }
  // alpha = -1/2 makes the k = 1 formula 0/0; its limit is 1/2.
  if (order > 1 && std::fabs(2.0 * alpha + 1.0) < 1e-14) sub(0) = std::sqrt(0.5);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("weighted_quad: eigenvalue solver failed at order " +
                         std::to_string(order));
  }
  // Total mass of the weight on (-1, 1).
  const double mass = std::pow(2.0, 2.0 * alpha + 1.0) * specfn::beta(alpha + 1.0, alpha + 1.0);
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = solver.eigenvalues()(i);
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

double apply_rule(const GaussRule& rule, const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(0.5 * (1.0 + rule.nodes[i]));
  }
  return sum;
}

}  // namespace

QuadResult weighted_quad(const std::function<double(double)>& f, double b, double tol) {
  if (!(b > 0.0)) throw DomainError("weighted_quad: requires b > 0");
  if (!(tol > 0.0)) throw DomainError("weighted_quad: requires tol > 0");

  // ds = du / 2 and s^(b-1) (1-s)^(b-1) = 2^(2-2b) ((1-u)(1+u))^(b-1).
  const double jacobian = std::pow(2.0, 1.0 - 2.0 * b);
  const double alpha = b - 1.0;

  QuadResult result;
  double previous = 0.0;
  bool have_previous = false;
  for (int order = 16; order <= 2048; order *= 2) {
    const double value = jacobian * apply_rule(gegenbauer_rule(order, alpha), f);
    result.evaluations += static_cast<std::size_t>(order);
    if (have_previous) {
      const double diff = std::fabs(value - previous);
      if (diff <= tol * std::fmax(1.0, std::fabs(value))) {
        result.value = value;
        result.error_estimate = diff;
        return result;
      }
    }
    previous = value;
    have_previous = true;
  }
  throw NonConvergence("weighted_quad: orders up to 2048 did not agree within " +
                       format_double(tol));
}

double central_diff(const std::function<double(double)>& f, double x, double h0, int levels) {
  if (!(h0 > 0.0)) throw DomainError("central_diff: requires h0 > 0");
  if (levels < 1) throw DomainError("central_diff: requires levels >= 1");

  std::vector<std::vector<double>> table(levels);
  double h = h0;
  for (int i = 0; i < levels; ++i, h *= 0.5) {
    table[i].resize(i + 1);
    table[i][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    double factor = 4.0;
    for (int j = 1; j <= i; ++j, factor *= 4.0) {
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
  }
  return table[levels - 1][levels - 1];
}

}  // namespace hyprec::numkit
