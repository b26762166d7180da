#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyprec/coeffrec.hpp"
#include "hyprec/errors.hpp"
#include "hyprec/hypergeom.hpp"
#include "hyprec/numkit.hpp"
#include "hyprec/specfn.hpp"

using namespace hyprec;
using std::numbers::pi;

namespace {

constexpr double kTol = 1e-15;

double F(double a, double b, double c, double x) { return hypergeom::hyp2f1({a, b, c}, x, kTol).value; }

// Frozen from a 200-term exact-rational partial sum of F(1/2,1/2;1;1/4)
// rounded to double; the live check below recomputes it.
constexpr double kQuarterValue = 1.0731820071493643;

double exact_partial_sum(const RationalHypParams& p, const Rational& x, std::size_t terms) {
  const auto w = coeffrec::hyp_coefficients(p, terms);
  Rational sum(0), power(1);
  for (const auto& c : w) {
    sum += c * power;
    power *= x;
  }
  return to_double(sum);
}

}  // namespace

TEST(Hyp2f1, ValueAtZero) {
  const auto r = hypergeom::hyp2f1({0.3, -2.7, 1.9}, 0.0, kTol);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_GE(r.terms_used, 1u);
  EXPECT_GE(r.error_bound, 0.0);
}

TEST(Hyp2f1, LogClosedForm) {
  const auto r = hypergeom::hyp2f1({1, 1, 2}, 0.5, kTol);
  EXPECT_NEAR(r.value, 2 * std::log(2.0), 1e-14);
  EXPECT_LE(r.error_bound, 1e-14);
}

TEST(Hyp2f1, FrozenRationalOracle) {
  EXPECT_NEAR(F(0.5, 0.5, 1, 0.25), kQuarterValue, 1e-14);
}

TEST(Hyp2f1, LiveRationalOracle) {
  const double oracle =
      exact_partial_sum({Rational(1, 2), Rational(1, 2), Rational(1)}, Rational(1, 4), 200);
  EXPECT_EQ(oracle, kQuarterValue);
  const double oracle2 =
      exact_partial_sum({Rational(3, 10), Rational(7, 10), Rational(3, 2)}, Rational(2, 5), 200);
  EXPECT_NEAR(F(0.3, 0.7, 1.5, 0.4), oracle2, 1e-14);
}

TEST(Hyp2f1, NegativeArgument) {
  // F(1,1;2;x) = -ln(1-x)/x also for x < 0.
  EXPECT_NEAR(F(1, 1, 2, -0.8), -std::log1p(0.8) / -0.8, 1e-14);
}

TEST(Hyp2f1, Symmetry) {
  for (double x : {-0.7, -0.2, 0.1, 0.5, 0.85}) {
    for (auto [a, b, c] : {std::tuple{0.3, 0.7, 1.5}, std::tuple{-0.5, 2.5, 3.1}, std::tuple{1.2, 0.4, 0.9}}) {
      const double ab = F(a, b, c, x);
      EXPECT_LE(std::fabs(ab - F(b, a, c, x)), 1e-13 * std::fabs(ab));
    }
  }
}

TEST(Hyp2f1, TerminatesOnNegativeInteger) {
  // a = -3: exact cubic partial sum.
  const RationalHypParams rp{Rational(-3), Rational(2, 5), Rational(7, 4)};
  const auto w = coeffrec::hyp_coefficients(rp, 3);
  const Rational x(3, 5);
  const double poly = to_double(Rational(w[0] + w[1] * x + w[2] * x * x + w[3] * x * x * x));
  const auto r = hypergeom::hyp2f1({-3, 0.4, 1.75}, 0.6, kTol);
  EXPECT_NEAR(r.value, poly, 1e-15);
  EXPECT_EQ(r.error_bound, 0.0);
}

TEST(Hyp2f1, RejectsOutsideUnitDisk) {
  EXPECT_THROW(hypergeom::hyp2f1({1, 1, 2}, 1.0, kTol), DomainError);
  EXPECT_THROW(hypergeom::hyp2f1({1, 1, 2}, -1.0, kTol), DomainError);
}

TEST(Hyp2f1, RejectsInvalidC) {
  EXPECT_THROW(hypergeom::hyp2f1({1, 1, 0}, 0.5, kTol), DomainError);
  EXPECT_THROW(hypergeom::hyp2f1({1, 1, -2}, 0.5, kTol), DomainError);
}

TEST(Hyp2f1, TermCapRaisesNonConvergence) {
  EXPECT_THROW(hypergeom::hyp2f1({0.5, 0.5, 1}, 0.999999, kTol, 50), NonConvergence);
}

TEST(Derivative, AtZero) {
  EXPECT_NEAR(hypergeom::hyp2f1_derivative({0.3, 0.7, 1.5}, 0.0, kTol).value, 0.3 * 0.7 / 1.5, 1e-16);
}

TEST(Derivative, MatchesFiniteDifferences) {
  for (auto [a, b, c] : {std::tuple{1.0, 1.0, 2.0}, std::tuple{0.3, 0.7, 1.5}, std::tuple{-0.4, 1.3, 2.2}}) {
    for (double x = 0.1; x <= 0.8 + 1e-9; x += 0.1) {
      const double fd = numkit::central_diff([&](double t) { return F(a, b, c, t); }, x, 1e-3);
      const double exact = hypergeom::hyp2f1_derivative({a, b, c}, x, kTol).value;
      EXPECT_LE(std::fabs(fd - exact), 1e-6) << a << "," << b << "," << c << " x=" << x;
    }
  }
}

TEST(Derivative, MeanKernelIdentity) {
  // d/dt F(-a, b; 2b; t) = -(a/2) F(1-a, b+1; 2b+1; t).
  for (auto [a, b] : {std::pair{0.5, 1.0}, std::pair{0.9, 0.2}, std::pair{0.3, 2.0}}) {
    for (double t : {0.1, 0.5, 0.9}) {
      const double lhs = hypergeom::hyp2f1_derivative({-a, b, 2 * b}, t, kTol).value;
      EXPECT_NEAR(lhs, -(a / 2) * F(1 - a, b + 1, 2 * b + 1, t), 1e-10);
    }
  }
}

TEST(ValueAtOne, Anchors) {
  EXPECT_NEAR(hypergeom::gauss_value_at_one({0.5, 0.5, 2}), 4 / pi, 1e-12);
  EXPECT_NEAR(hypergeom::gauss_value_at_one({0, 0.7, 1.9}), 1.0, 1e-14);
}

TEST(ValueAtOne, AgreesWithSeriesNearOne) {
  const double expected = std::exp(specfn::ln_gamma(2) + specfn::ln_gamma(1.5) - specfn::ln_gamma(2.5));
  EXPECT_NEAR(hypergeom::gauss_value_at_one({-0.5, 1, 2}), expected, 1e-14);
  EXPECT_NEAR(F(-0.5, 1, 2, 0.999), expected, 1e-3);
}

TEST(ValueAtOne, Preconditions) {
  EXPECT_THROW(hypergeom::gauss_value_at_one({1, 1, 2}), DomainError);
  EXPECT_THROW(hypergeom::gauss_value_at_one({2.5, -2, 0.8}), DomainError);
}

TEST(ZeroBalanced, Literal) {
  EXPECT_NEAR(hypergeom::zero_balanced_asymptote(0.5, 0.5, 0.99), (std::log(16.0) - std::log(0.01)) / pi,
              1e-13);
  EXPECT_NEAR(hypergeom::zero_balanced_asymptote(1, 1, 0.5), std::log(2.0), 1e-14);
}

TEST(ZeroBalanced, ErrorScalesLikeXLogX) {
  for (double x : {0.9, 0.99, 0.999}) {
    const double gap = std::fabs(F(0.5, 0.5, 1, x) - hypergeom::zero_balanced_asymptote(0.5, 0.5, x));
    const double scale = (1 - x) * std::fabs(std::log(1 - x));
    EXPECT_LE(gap / scale, 10.0) << "x=" << x;
  }
  EXPECT_LE(std::fabs(F(1, 1, 2, 0.99) - hypergeom::zero_balanced_asymptote(1, 1, 0.99)), 0.05);
}

TEST(EulerTransform, SelfConsistency) {
  EXPECT_EQ(hypergeom::euler_transform_eval({0.7, 0.9, 1.2}, 0.0, kTol).value, 1.0);
  EXPECT_LE(std::fabs(hypergeom::euler_transform_eval({0.7, 0.9, 1.2}, 0.5, kTol).value - F(0.7, 0.9, 1.2, 0.5)),
            1e-10);
  EXPECT_NEAR(hypergeom::euler_transform_eval({1, 1, 2}, 0.5, kTol).value, F(1, 1, 2, 0.5), 1e-15);
  for (double x = 0.1; x <= 0.8 + 1e-9; x += 0.1) {
    EXPECT_LE(std::fabs(hypergeom::euler_transform_eval({0.3, 0.7, 1.5}, x, kTol).value - F(0.3, 0.7, 1.5, x)),
              1e-10);
  }
}

TEST(Contiguous, Residuals) {
  // At x = 0 every F is 1 and the coefficients cancel.
  EXPECT_EQ(hypergeom::contiguous_residual({2, 1, 3}, 0.0, kTol), 0.0);
  EXPECT_NEAR(hypergeom::contiguous_residual({0.3, 0.7, 1.5}, 0.0, kTol), 0.0, 1e-15);
  EXPECT_LE(std::fabs(hypergeom::contiguous_residual({0.3, 0.7, 1.5}, 0.4, kTol)), 1e-10);
  EXPECT_LE(std::fabs(hypergeom::contiguous_residual({2, 1, 3}, 0.25, kTol)), 1e-12);
  for (double x = 0.1; x <= 0.8 + 1e-9; x += 0.1) {
    EXPECT_LE(std::fabs(hypergeom::contiguous_residual({1.3, 0.6, 2.1}, x, kTol)), 1e-9);
  }
}

TEST(DfRelations, Residuals) {
  for (auto [a, b, c, x] : {std::tuple{0.3, 0.7, 1.5, 0.4}, std::tuple{1.0, 1.0, 2.0, 0.5}}) {
    const auto [r1, r2] = hypergeom::df_relation_residuals({a, b, c}, x, kTol);
    EXPECT_LE(std::fabs(r1), 1e-9);
    EXPECT_LE(std::fabs(r2), 1e-9);
  }
  // a = 1: F(0, b; c; x) = 1, so the second relation is 0 = 0.
  EXPECT_EQ(hypergeom::df_relation_residuals({1, 0.8, 1.7}, 0.3, kTol).second, 0.0);
  EXPECT_THROW(hypergeom::df_relation_residuals({1, 1, 2}, 0.0, kTol), DomainError);
}
