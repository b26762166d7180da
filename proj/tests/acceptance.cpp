// Acceptance checks. Prints one PASS/FAIL line per criterion; with a numeric
// argument only that criterion runs. Exit status is nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "hyprec/coeffrec.hpp"
#include "hyprec/hypergeom.hpp"
#include "hyprec/numkit.hpp"
#include "hyprec/schurmean.hpp"
#include "hyprec/specfn.hpp"

using namespace hyprec;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct BoxEntry {
  Rational a, b, c;
};

const std::vector<BoxEntry>& box() {
  static const std::vector<BoxEntry> entries = {
      {q(3, 10), q(7, 10), q(3, 2)}, {q(1), q(1), q(2)}, {q(9, 10), q(1, 5), q(12, 5)}, {q(-1, 2), q(-1, 2), q(2)}};
  return entries;
}

std::vector<Rational> p_set(const BoxEntry& e) { return {q(-1), q(0), q(1, 2), q(2), Rational(e.c - e.a - e.b)}; }
const std::vector<Rational> kThetas = {q(-1), q(-1, 2), q(0), q(1, 2), q(1)};

HypParams dbl(const BoxEntry& e) { return {to_double(e.a), to_double(e.b), to_double(e.c)}; }

// Floating relative error with absolute floor `floor`, scaled against `rel`.
bool close(double x, double y, double rel, double floor) { return close_rel(x, y, rel, floor); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Independent oracle: convolution of the series with the binomial expansion
// of (1 - theta x)^p, both built from their own ratio recurrences.
std::vector<Rational> convolution(const BoxEntry& e, const Rational& p, const Rational& theta, std::size_t N) {
  std::vector<Rational> weight(N + 1), w(N + 1), out(N + 1);
  weight[0] = 1;
  w[0] = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    const Rational k1(static_cast<long>(k - 1));
    const Rational kk(static_cast<long>(k));
    weight[k] = weight[k - 1] * (k1 - p) * theta / kk;
    w[k] = w[k - 1] * (e.a + k1) * (e.b + k1) / ((e.c + k1) * kk);
  }
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t k = 0; k <= n; ++k) out[n] += w[k] * weight[n - k];
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& e : box()) {
    for (const Rational& p : p_set(e)) {
      for (const Rational& theta : kThetas) {
        const RationalWeightedSeriesSpec rs{{e.a, e.b, e.c}, p, theta};
        const auto exact = coeffrec::u_general(rs, 30).coeffs;
        o.require(exact == coeffrec::cauchy_oracle(rs, 30).coeffs, "rational recurrence != library oracle");
        o.require(exact == convolution(e, p, theta, 30), "rational recurrence != independent convolution");
        const WeightedSeriesSpec fs{dbl(e), to_double(p), to_double(theta)};
        const auto u = coeffrec::u_general(fs, 30).coeffs;
        const auto oracle = coeffrec::cauchy_oracle(fs, 30).coeffs;
        for (std::size_t n = 0; n <= 30; ++n) {
          worst = std::max(worst, rel_error(u[n], oracle[n], 1e-14 / 1e-10));
        }
      }
    }
  }
  o.require(worst <= 1e-10, "float relative error " + std::to_string(worst));
  const double elapsed = seconds_since(start);
  o.require(elapsed <= 5.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "worst float rel error " + format_double(worst);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  double worst_residual = 0.0;
  for (const auto& e : box()) {
    const RationalHypParams rp{e.a, e.b, e.c};
    for (const Rational& p : p_set(e)) {
      o.require(coeffrec::u_theta_minus1(rp, p, 30).coeffs ==
                    coeffrec::u_general(RationalWeightedSeriesSpec{rp, p, q(-1)}, 30).coeffs,
                "theta=-1 rational mismatch");
      o.require(coeffrec::u_theta_plus1(rp, p, 30).coeffs ==
                    coeffrec::u_general(RationalWeightedSeriesSpec{rp, p, q(1)}, 30).coeffs,
                "theta=1 rational mismatch");
      for (const Rational& r : coeffrec::order_reduction_residual(rp, p, 31)) {
        o.require(sgn(r) == 0, "rational order-reduction residual nonzero");
      }
      const HypParams hp = dbl(e);
      const double pd = to_double(p);
      const auto m1 = coeffrec::u_theta_minus1(hp, pd, 30).coeffs;
      const auto g1 = coeffrec::u_general(WeightedSeriesSpec{hp, pd, -1.0}, 30).coeffs;
      const auto p1 = coeffrec::u_theta_plus1(hp, pd, 30).coeffs;
      const auto gp = coeffrec::u_general(WeightedSeriesSpec{hp, pd, 1.0}, 30).coeffs;
      for (std::size_t n = 0; n <= 30; ++n) {
        worst = std::max(worst, rel_error(m1[n], g1[n], 1e-14 / 1e-12));
        worst = std::max(worst, rel_error(p1[n], gp[n], 1e-14 / 1e-12));
      }
      for (double r : coeffrec::order_reduction_residual(hp, pd, 31)) worst_residual = std::max(worst_residual, std::fabs(r));
    }
  }
  o.require(worst <= 1e-12, "specialization float error " + format_double(worst));
  o.require(worst_residual <= 1e-12, "order-reduction residual " + format_double(worst_residual));
  if (o.pass) {
    o.detail = "exact in rational mode; float " + format_double(worst) + ", residual " + format_double(worst_residual);
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& e : box()) {
    for (const Rational& p : p_set(e)) {
      for (const Rational& theta : kThetas) {
        const auto u = coeffrec::u_general(RationalWeightedSeriesSpec{{e.a, e.b, e.c}, p, theta}, 3).coeffs;
        const Rational ab_c = e.a * e.b / e.c;
        o.require(u[0] == 1, "u_0");
        o.require(u[1] == ab_c - p * theta, "u_1 = ab/c - p theta");
        const Rational u2 = theta * theta * p * (p - 1) / 2 - theta * p * ab_c +
                            e.a * e.b * (e.b + 1) * (e.a + 1) / (2 * e.c * (e.c + 1));
        o.require(u[2] == u2, "u_2 closed form");
      }
    }
    const auto v = coeffrec::v_log_product(RationalHypParams{e.a, e.b, e.c}, 3).coeffs;
    o.require(v[0] == 0 && v[1] == -1, "v_0 = 0, v_1 = -1");
  }
  for (const Rational& p : {q(1), q(3)}) {
    const auto k = coeffrec::y1_k_series(p, 10).coeffs;
    o.require(k[1] == Rational(q(1, 4) - p / 2), "a_1 = 1/4 - p/2");
    o.require(k == coeffrec::y1_k_published(p, 10), "K-series published recurrence");
  }
  const auto y2 = coeffrec::y2_regression(q(1), 10);
  o.require(y2.oracle.coeffs[1] == q(9, 8) && y2.published.coeffs[1] == q(7, 8), "Y2 u_1 values");
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--suite", "special-cases", "--seed", "42"}, out, err);
  o.require(code == 0, "special-cases suite exit " + std::to_string(code));
  o.require(out.str().find("known discrepancy") != std::string::npos, "discrepancy notice missing");
  if (o.pass) o.detail = "u_0,u_1,u_2,v_0,v_1 exact; Y1 n<=10 exact; Y2 u_1 9/8 vs 7/8 reported";
  return o;
}

Outcome criterion4() {
  Outcome o;
  // (1-x)^p F(a,b;c;x) = F(c-a,c-b;c;x) at p = a+b-c (Euler's transformation).
  const HypParams hp{0.7, 0.9, 1.2};
  const auto u = coeffrec::u_theta_plus1(hp, hp.a + hp.b - hp.c, 15).coeffs;
  double worst = 0.0;
  for (unsigned n = 0; n <= 15; ++n) {
    const double closed = specfn::pochhammer(hp.c - hp.a, n) * specfn::pochhammer(hp.c - hp.b, n) /
                          (specfn::pochhammer(1.0, n) * specfn::pochhammer(hp.c, n));
    worst = std::max(worst, rel_error(u[n], closed, 1e-14 / 1e-11));
  }
  o.require(worst <= 1e-11, "Euler closed form error " + format_double(worst));
  for (const auto& e : box()) {
    const RationalHypParams rp{e.a, e.b, e.c};
    o.require(coeffrec::u_theta_plus1(rp, Rational(e.a + e.b - e.c), 15).coeffs ==
                  coeffrec::hyp_coefficients(RationalHypParams{e.c - e.a, e.c - e.b, e.c}, 15),
              "Euler closed form (rational)");
    for (const Rational& p : p_set(e)) {
      const auto bin = coeffrec::u_theta_plus1(RationalHypParams{e.a, e.b, e.b}, p, 20).coeffs;
      for (unsigned n = 0; n <= 20; ++n) {
        o.require(bin[n] == specfn::pochhammer_over_factorial(Rational(e.a - p), n), "binomial case c=b");
      }
    }
    for (const Rational& theta : kThetas) {
      for (const Rational& r : coeffrec::p_minus1_identity_residual(rp, theta, 20)) {
        o.require(sgn(r) == 0, "p=-1 identity (rational)");
      }
      for (double r : coeffrec::p_minus1_identity_residual(dbl(e), to_double(theta), 20)) {
        o.require(std::fabs(r) <= 1e-12, "p=-1 identity residual " + format_double(r));
      }
    }
  }
  if (o.pass) o.detail = "Euler worst rel " + format_double(worst) + "; binomial and p=-1 exact";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const RationalHypParams rp{q(1), q(1), q(2)};
  o.require(coeffrec::v_log_product(rp, 20).coeffs == coeffrec::log_convolution_oracle(rp, 20).coeffs,
            "rational log product");
  const auto w = coeffrec::hyp_coefficients(rp, 20);
  const auto v = coeffrec::v_log_product(rp, 20).coeffs;
  for (std::size_t n = 1; n <= 20; ++n) {
    Rational sum(0);
    for (std::size_t k = 1; k <= n; ++k) sum -= w[n - k] / Rational(static_cast<long>(k));
    o.require(v[n] == sum, "independent log convolution");
  }
  double worst = 0.0;
  for (const auto& e : box()) {
    const auto vf = coeffrec::v_log_product(dbl(e), 20).coeffs;
    const auto of = coeffrec::log_convolution_oracle(dbl(e), 20).coeffs;
    for (std::size_t n = 0; n <= 20; ++n) worst = std::max(worst, rel_error(vf[n], of[n], 1e-14 / 1e-11));
  }
  o.require(worst <= 1e-11, "float log product error " + format_double(worst));
  if (o.pass) o.detail = "exact at (1,1,2); float worst " + format_double(worst);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const double g = 0.5772156649015329;
  const std::vector<std::pair<double, double>> pairs = {
      {std::exp(specfn::ln_gamma(0.5)), std::sqrt(pi)},
      {specfn::digamma(1.0), -g},
      {specfn::digamma(0.5), -g - 2 * std::log(2.0)},
      {specfn::beta(0.5, 0.5), pi},
      {specfn::r_zero_balanced(1, 1), 0.0},
      {specfn::r_zero_balanced(0.5, 0.5), std::log(16.0)},
  };
  double worst = 0.0;
  for (const auto& [got, want] : pairs) worst = std::max(worst, std::fabs(got - want));
  o.require(worst <= 1e-12, "anchor error " + format_double(worst));
  if (o.pass) o.detail = "worst abs error " + format_double(worst);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  constexpr double tol = 1e-15;
  o.require(std::fabs(hypergeom::gauss_value_at_one({0.5, 0.5, 2}) - 4 / pi) <= 1e-12, "F(1/2,1/2;2;1) = 4/pi");
  double worst_ratio = 0.0;
  for (double x : {0.9, 0.99, 0.999}) {
    const double gap = std::fabs(hypergeom::hyp2f1({0.5, 0.5, 1}, x, tol).value -
                                 hypergeom::zero_balanced_asymptote(0.5, 0.5, x));
    worst_ratio = std::max(worst_ratio, gap / ((1 - x) * std::fabs(std::log(1 - x))));
  }
  o.require(worst_ratio <= 10.0, "asymptote ratio " + format_double(worst_ratio));
  double worst_euler = 0.0, worst_contig = 0.0, worst_df = 0.0;
  for (const HypParams& hp : {HypParams{0.7, 0.9, 1.2}, HypParams{0.3, 0.7, 1.5}, HypParams{1, 1, 2},
                              HypParams{2, 1, 3}, HypParams{-0.4, 1.3, 2.2}}) {
    for (int i = 1; i <= 8; ++i) {
      const double x = 0.1 * i;
      worst_euler = std::max(worst_euler, std::fabs(hypergeom::euler_transform_eval(hp, x, tol).value -
                                                    hypergeom::hyp2f1(hp, x, tol).value));
      worst_contig = std::max(worst_contig, std::fabs(hypergeom::contiguous_residual(hp, x, tol)));
      const auto [r1, r2] = hypergeom::df_relation_residuals(hp, x, tol);
      worst_df = std::max({worst_df, std::fabs(r1), std::fabs(r2)});
    }
  }
  o.require(worst_euler <= 1e-10, "Euler self-consistency " + format_double(worst_euler));
  o.require(worst_contig <= 1e-9, "contiguous residual " + format_double(worst_contig));
  o.require(worst_df <= 1e-9, "dF residual " + format_double(worst_df));
  const double elapsed = seconds_since(start);
  o.require(elapsed <= 5.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "ratio " + format_double(worst_ratio) + ", euler " + format_double(worst_euler) + ", contiguous " +
               format_double(worst_contig) + ", dF " + format_double(worst_df);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); };
  double worst_axiom = 0.0;
  for (int i = 0; i < 12; ++i) {
    const MeanParams mp{uniform(0.05, 0.95), uniform(0.1, 3.0)};
    const double x = uniform(0.1, 5), y = uniform(0.1, 5), lambda = uniform(0.5, 3);
    for (auto mean : {&schurmean::mean_series, &schurmean::mean_quadrature}) {
      const double m = mean(x, y, mp, {});
      const double s = std::max(x, y);
      worst_axiom = std::max(worst_axiom, std::fabs(mean(x, x, mp, {}) - x) / x);
      worst_axiom = std::max(worst_axiom, std::fabs(m - mean(y, x, mp, {})) / s);
      worst_axiom = std::max(worst_axiom, std::fabs(mean(lambda * x, lambda * y, mp, {}) - lambda * m) / (lambda * s));
      worst_axiom = std::max(worst_axiom, std::max(std::min(x, y) - m, m - s) / s);
    }
  }
  o.require(worst_axiom <= 1e-10, "axiom error " + format_double(worst_axiom));
  double worst = 0.0;
  for (const MeanParams& mp : {MeanParams{0.3, 0.4}, MeanParams{0.9, 0.2}, MeanParams{0.5, 1.5}}) {
    for (double x : {0.5, 1.0, 2.0}) {
      for (double y : {0.5, 1.0, 2.0}) {
        worst = std::max(worst, std::fabs(schurmean::mean_series(x, y, mp) - schurmean::mean_quadrature(x, y, mp)));
      }
    }
  }
  o.require(worst <= 1e-7, "series vs quadrature " + format_double(worst));
  const double elapsed = seconds_since(start);
  o.require(elapsed <= 10.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "axioms " + format_double(worst_axiom) + ", representations " + format_double(worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<double> grid = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (double v : schurmean::q_p0_profile({0.9, 0.4}, grid)) o.require(std::fabs(v - 1) <= 1e-10, "Q == 1");
  const auto down = schurmean::q_p0_profile({0.9, 0.2}, grid);
  const auto up = schurmean::q_p0_profile({0.3, 0.5}, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    o.require(down[i] < down[i - 1], "(0.9,0.2) strictly decreasing");
    o.require(up[i] > up[i - 1], "(0.3,0.5) strictly increasing");
  }
  for (const auto& [a, b] : {std::pair{q(9, 10), q(1, 5)}, std::pair{q(3, 10), q(1, 2)}}) {
    const auto r = schurmean::q_p0_dn_sequence(BasicLemma3Params<Rational>{a, b}, 30);
    o.require(sgn(r.d[0]) == 0 && sgn(r.d[1]) == 0, "d_0 = d_1 = 0");
    const int expected = -sgn(Rational(a - b - q(1, 2)));
    for (std::size_t n = 2; n <= 30; ++n) o.require(sgn(r.d[n]) == expected, "d_n sign");
  }
  if (o.pass) o.detail = "flat, monotone and d_n sign pattern hold (n <= 30, exact)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(10);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); };
  int samples = 0;
  while (samples < 50) {
    const double a = uniform(0.01, 0.98);
    const double b = uniform(0.01, 0.99 - a);
    const double s = a + b - 0.5;
    if (std::fabs(s) < 1e-3) continue;
    const double margin = schurmean::gamma_inequality_margin(a, b);
    o.require(s > 0 ? margin < 0 : margin > 0, "sign at (" + format_double(a) + "," + format_double(b) + ")");
    ++samples;
  }
  double worst = 0.0;
  for (const auto& [a, b] : {std::pair{0.2, 0.3}, std::pair{0.1, 0.4}, std::pair{0.45, 0.05}}) {
    worst = std::max(worst, std::fabs(schurmean::gamma_inequality_margin(a, b)));
  }
  o.require(worst <= 1e-12, "margin at a+b=1/2 " + format_double(worst));
  if (o.pass) o.detail = "50 samples, balanced margin " + format_double(worst);
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto t_grid = schurmean::default_t_grid();
  std::size_t plus = 0, minus = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) {
        const RegionTriple tr{{0.05 + 0.1 * i, 0.2 * (j + 1)}, -0.5 + 2.0 * k / 9.0};
        if (tr.mean.a + tr.mean.b < 0.5) continue;
        const auto label = schurmean::classify_region(tr).label;
        if (label == Region::Neither) continue;
        double lo = INFINITY, hi = -INFINITY;
        for (double t : t_grid) {
          const double g = schurmean::g_m(t, tr);
          lo = std::min(lo, g);
          hi = std::max(hi, g);
        }
        if (label == Region::EPlus) {
          ++plus;
          o.require(lo >= -1e-8, "E+ triple with min G_m " + format_double(lo));
        } else {
          ++minus;
          o.require(hi <= 1e-8, "E- triple with max G_m " + format_double(hi));
        }
      }
    }
  }
  std::mt19937_64 rng(11);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); };
  int draws = 0;
  while (draws < 20) {
    const RegionTriple tr{{uniform(0.05, 0.95), uniform(0.1, 2.0)}, uniform(-0.5, 1.5)};
    double x = uniform(0.2, 4), y = uniform(0.2, 4);
    if (x > y) std::swap(x, y);
    if (y - x < 0.05 * y) continue;
    const double g = schurmean::g_m(1 - x / y, tr);
    if (std::fabs(g) <= 1e-4) continue;
    o.require((schurmean::schur_condition_sample(x, y, tr) > 0) == (g > 0), "Schur sign disagreement");
    ++draws;
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed <= 60.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(plus) + " E+ and " + std::to_string(minus) + " E- triples; 20 sign draws";
  }
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli::run({"verify", "--suite", "all", "--seed", "42"}, out1, err1);
  const int c2 = cli::run({"verify", "--suite", "all", "--seed", "42"}, out2, err2);
  o.require(c1 == 0 && c2 == 0, "exit codes " + std::to_string(c1) + "," + std::to_string(c2));
  o.require(out1.str() == out2.str(), "reports differ");
  o.require(out1.str().find("known discrepancy") != std::string::npos, "known-discrepancy notice missing");
  if (o.pass) o.detail = "byte-identical reports, exit 0";
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"recurrence-oracle equivalence", criterion1},
    {"corollary consistency", criterion2},
    {"published literals", criterion3},
    {"closed forms", criterion4},
    {"log-product recurrence", criterion5},
    {"special-function anchors", criterion6},
    {"behaviour near x = 1", criterion7},
    {"mean suite", criterion8},
    {"Q_p0 monotonicity", criterion9},
    {"Gamma-ratio inequality", criterion10},
    {"sampled convexity characterisation", criterion11},
    {"determinism", criterion12},
};

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  if (argc > 1) only = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
  if (only > kCriteria.size()) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  int failures = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    Outcome o;
    try {
      o = kCriteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", kCriteria[i].first, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
