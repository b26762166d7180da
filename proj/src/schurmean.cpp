#include "hyprec/schurmean.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "hyprec/errors.hpp"
#include "hyprec/specfn.hpp"

namespace hyprec {

void validate(const MeanParams& mp) {
  if (!(mp.a > 0.0 && mp.a < 1.0)) {
    throw DomainError("mean parameter a must lie in (0, 1); got " + format_double(mp.a));
  }
  if (!(mp.b > 0.0)) {
    throw DomainError("mean parameter b must be positive; got " + format_double(mp.b));
  }
}

std::string to_string(Region region) {
  switch (region) {
    case Region::EPlus: return "E+";
    case Region::EMinus: return "E-";
    case Region::Neither: return "neither";
  }
  return "unknown";
}

namespace schurmean {

namespace {

double f21(double a, double b, double c, double t, const EvalOptions& opts) {
  return hypergeom::hyp2f1({a, b, c}, t, opts.tol, opts.term_cap).value;
}

void require_open_unit(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError(std::string(what) + ": requires 0 < t < 1");
}

void require_positive_pair(double x, double y, const char* what) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError(std::string(what) + ": requires x, y > 0");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double threshold_m0(const MeanParams& mp) { return (mp.a + 2.0 * mp.b) / (1.0 + 2.0 * mp.b); }

double mean_series(double x, double y, const MeanParams& mp, const EvalOptions& opts) {
  validate(mp);
  require_positive_pair(x, y, "mean_series");
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double t = 1.0 - lo / hi;
  return hi * std::pow(f21(-mp.a, mp.b, 2.0 * mp.b, t, opts), 1.0 / mp.a);
}

double mean_quadrature(double x, double y, const MeanParams& mp, const EvalOptions& opts) {
  validate(mp);
  require_positive_pair(x, y, "mean_quadrature");
  const auto integrand = [&](double s) { return std::pow(s * x + (1.0 - s) * y, mp.a); };
  const auto quad = numkit::weighted_quad(integrand, mp.b, opts.quad_tol);
  return std::pow(quad.value / specfn::beta(mp.b, mp.b), 1.0 / mp.a);
}

double g_m(double t, const RegionTriple& triple, const EvalOptions& opts) {
  validate(triple.mean);
  require_open_unit(t, "g_m");
  const auto [a, b] = triple.mean;
  return f21(1.0 - a, b, 2.0 * b + 1.0, t, opts) -
         std::pow(1.0 - t, 1.0 - triple.m) * f21(1.0 - a, b + 1.0, 2.0 * b + 1.0, t, opts);
}

double g_m_alt(double t, const RegionTriple& triple, const EvalOptions& opts) {
  validate(triple.mean);
  require_open_unit(t, "g_m_alt");
  const auto [a, b] = triple.mean;
  if (!(a + b < 1.0)) throw DomainError("g_m_alt: requires a + b < 1");
  return f21(1.0 - a, b, 2.0 * b + 1.0, t, opts) -
         std::pow(1.0 - t, a + b - triple.m) * f21(a + 2.0 * b, b, 2.0 * b + 1.0, t, opts);
}

double g_m_series_reduction_residual(double t, const RegionTriple& triple,
                                     const EvalOptions& opts) {
  validate(triple.mean);
  require_open_unit(t, "g_m_series_reduction_residual");
  const auto [a, b] = triple.mean;
  return 2.0 * f21(-a, b, 2.0 * b, t, opts) -
         (1.0 - t) * f21(1.0 - a, b + 1.0, 2.0 * b + 1.0, t, opts) -
         f21(1.0 - a, b, 2.0 * b + 1.0, t, opts);
}

GmEndpoints g_m_endpoints(const RegionTriple& triple) {
  validate(triple.mean);
  const auto [a, b] = triple.mean;
  const double m = triple.m;
  const double c = 2.0 * b + 1.0;

  GmEndpoints out;
  out.slope_at_zero = threshold_m0(triple.mean) - m;

  // F(1-a, b; 2b+1; 1) is finite for every admissible (a, b): c - a' - b = a + b > 0.
  const double leading = hypergeom::gauss_value_at_one({1.0 - a, b, c});
  const double s = a + b;
  if (s > 1.0) {
    if (1.0 - m > 0.0) {
      out.value_at_one = leading;
      out.case_tag = "a+b>1,m<1";
    } else if (1.0 - m == 0.0) {
      out.value_at_one = leading - hypergeom::gauss_value_at_one({1.0 - a, b + 1.0, c});
      out.case_tag = "a+b>1,m=1";
    } else {
      out.value_at_one = -kInf;
      out.case_tag = "a+b>1,m>1";
    }
  } else if (s == 1.0) {
    if (1.0 - m > 0.0) {
      out.value_at_one = leading;
      out.case_tag = "a+b=1,m<1";
    } else {
      out.value_at_one = -kInf;
      out.case_tag = "a+b=1,m>=1";
    }
  } else {
    const double exponent = s - m;
    if (exponent > 0.0) {
      out.value_at_one = leading;
      out.case_tag = "a+b<1,m<a+b";
    } else if (exponent == 0.0) {
      out.value_at_one = leading - hypergeom::gauss_value_at_one({a + 2.0 * b, b, c});
      out.case_tag = "a+b<1,m=a+b";
    } else {
      out.value_at_one = -kInf;
      out.case_tag = "a+b<1,m>a+b";
    }
  }
  return out;
}

RegionLabel classify_region(const RegionTriple& triple) {
  validate(triple.mean);
  const auto [a, b] = triple.mean;
  const double m = triple.m;
  const double s = a + b;
  const double m0 = threshold_m0(triple.mean);

  std::string plus_tag;
  if (m0 - m >= 0.0) {
    if (s >= 1.0 && 1.0 > m) {
      plus_tag = "a+b>=1>m";
    } else if (m < s && s < 1.0) {
      plus_tag = "m<a+b<1";
    } else if (m == s && s <= 0.5) {
      plus_tag = "m=a+b<=1/2";
    }
  }
  std::string minus_tag;
  if (m0 - m <= 0.0) {
    if (s >= 1.0 && m >= 1.0) {
      minus_tag = "a+b>=1,m>=1";
    } else if (0.5 <= m && m == s && s < 1.0) {
      minus_tag = "1/2<=m=a+b<1";
    } else if (s < 1.0 && s < m) {
      minus_tag = "a+b<1,a+b<m";
    }
  }

  RegionLabel out;
  out.m0 = m0;
  if (!plus_tag.empty() && !minus_tag.empty()) {
    out.label = Region::EPlus;
    out.branch = plus_tag + " & " + minus_tag;
    out.in_both = true;
  } else if (!plus_tag.empty()) {
    out.label = Region::EPlus;
    out.branch = plus_tag;
  } else if (!minus_tag.empty()) {
    out.label = Region::EMinus;
    out.branch = minus_tag;
  } else {
    out.label = Region::Neither;
    out.branch = "none";
  }
  return out;
}

FuzzedRegion classify_region_fuzzed(const RegionTriple& triple, double eps) {
  FuzzedRegion out;
  out.label = classify_region(triple);
  RegionTriple lower = triple;
  RegionTriple upper = triple;
  lower.m -= eps;
  upper.m += eps;
  const RegionLabel below = classify_region(lower);
  const RegionLabel above = classify_region(upper);
  out.boundary = out.label.in_both || below.label != out.label.label ||
                 above.label != out.label.label || below.in_both || above.in_both;
  return out;
}

bool schur_hypothesis_holds(const MeanParams& mp) { return mp.a + mp.b >= 0.5; }

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  grid.reserve(49);
  for (int k = 1; k <= 49; ++k) grid.push_back(0.02 * k);
  return grid;
}

Lemma3Params lemma3_params_for_theorem4(const MeanParams& mp) {
  validate(mp);
  return {1.0 - mp.a, mp.b};
}

double lemma3_p0(const Lemma3Params& lp) { return lp.a / (2.0 * lp.b + 1.0); }

namespace {

void validate_lemma3(const Lemma3Params& lp) { validate(MeanParams{lp.a, lp.b}); }

}  // namespace

std::vector<double> q_p0_profile(const Lemma3Params& lp, std::span<const double> t_grid,
                                 const EvalOptions& opts) {
  validate_lemma3(lp);
  const double p0 = lemma3_p0(lp);
  const double c = 2.0 * lp.b + 1.0;
  std::vector<double> values;
  values.reserve(t_grid.size());
  for (double t : t_grid) {
    require_open_unit(t, "q_p0_profile");
    const double numerator = std::pow(1.0 - t, -p0) * f21(lp.a, lp.b, c, t, opts);
    values.push_back(numerator / f21(lp.a, lp.b + 1.0, c, t, opts));
  }
  return values;
}

double lemma3_inequality_margin(const Lemma3Params& lp, double t, const EvalOptions& opts) {
  validate_lemma3(lp);
  require_open_unit(t, "lemma3_inequality_margin");
  const double c = 2.0 * lp.b + 1.0;
  return f21(lp.a, lp.b, c, t, opts) -
         std::pow(1.0 - t, lemma3_p0(lp)) * f21(lp.a, lp.b + 1.0, c, t, opts);
}

template <class T>
DnReport<T> q_p0_dn_sequence(const BasicLemma3Params<T>& lp, std::size_t N) {
  if (N < 2) throw DomainError("q_p0_dn_sequence requires N >= 2");
  if (!(lp.a > T(0) && lp.a < T(1) && lp.b > T(0))) {
    throw DomainError("q_p0_dn_sequence requires a in (0, 1) and b > 0");
  }
  const T& a = lp.a;
  const T& b = lp.b;
  const T two_b1 = T(2) * b + T(1);
  const T p0 = a / two_b1;
  const BasicHypParams<T> params{a, b, two_b1};
  const std::vector<T> u = coeffrec::u_theta_plus1(params, T(-p0), N + 1).coeffs;

  // v_{n+1} / v_n for the coefficients of F(a, b+1; 2b+1; t).
  const auto ratio = [&](std::size_t i) {
    const T n(static_cast<unsigned long>(i));
    return T((n + a) * (n + b + T(1)) / ((n + T(1)) * (n + two_b1)));
  };

  DnReport<T> report;
  report.d.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) report.d[n] = u[n + 1] - ratio(n) * u[n];

  report.alpha_prime.assign(N + 1, T(0));
  report.beta_prime.assign(N + 1, T(0));
  report.alpha_prime_closed.assign(N + 1, T(0));
  report.beta_prime_closed.assign(N + 1, T(0));
  report.recursion_residual.assign(N + 1, T(0));
  const T minus_p0 = -p0;
  const T half = T(1) / T(2);
  for (std::size_t i = 1; i <= N; ++i) {
    const T n(static_cast<unsigned long>(i));
    const T ap = coeffrec::two_alpha(params, minus_p0, i) - ratio(i);
    const T bp = ap * ratio(i - 1) - coeffrec::beta_coeff(params, minus_p0, i);
    report.alpha_prime[i] = ap;
    report.beta_prime[i] = bp;
    report.alpha_prime_closed[i] = n * (two_b1 * n + T(4) * b * b + T(2) * a - T(1)) /
                                   (two_b1 * (n + T(1)) * (n + two_b1));
    report.beta_prime_closed[i] = -T(2) * b * (two_b1 - a) * (a - b - half) /
                                  (two_b1 * two_b1) * (n - T(1)) /
                                  ((n + T(1)) * (n + T(2) * b) * (n + two_b1));
    report.recursion_residual[i] = report.d[i] - ap * report.d[i - 1] - bp * u[i - 1];
    if (!(ap > T(0))) report.alpha_prime_nonpositive.push_back(i);
  }
  return report;
}

template DnReport<double> q_p0_dn_sequence(const BasicLemma3Params<double>&, std::size_t);
template DnReport<Rational> q_p0_dn_sequence(const BasicLemma3Params<Rational>&, std::size_t);

double gamma_inequality_margin(double a, double b) {
  if (!(a > 0.0 && b > 0.0 && a + b < 1.0)) {
    throw DomainError("gamma_inequality_margin: requires 0 < a < a + b < 1");
  }
  using specfn::ln_gamma;
  return std::exp(ln_gamma(a + b) - ln_gamma(a + 2.0 * b)) -
         std::exp(ln_gamma(1.0 - a - b) - ln_gamma(1.0 - a));
}

double schur_condition_sample(double x, double y, const RegionTriple& triple,
                              const EvalOptions& opts) {
  validate(triple.mean);
  require_positive_pair(x, y, "schur_condition_sample");
  if (x == y) throw DomainError("schur_condition_sample: requires x != y");
  const double h = 1e-4 * std::max(x, y);
  const auto& mp = triple.mean;
  const double dx =
      numkit::central_diff([&](double s) { return mean_series(s, y, mp, opts); }, x, h);
  const double dy =
      numkit::central_diff([&](double s) { return mean_series(x, s, mp, opts); }, y, h);
  const double w = 1.0 - triple.m;
  return (y - x) * (std::pow(y, w) * dy - std::pow(x, w) * dx);
}

double schur_factor(double x, double y, const RegionTriple& triple, const EvalOptions& opts) {
  validate(triple.mean);
  require_positive_pair(x, y, "schur_factor");
  const auto [a, b] = triple.mean;
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  const double t = 1.0 - lo / hi;
  const double f = f21(-a, b, 2.0 * b, t, opts);
  return 0.5 * (hi - lo) * std::pow(hi, 1.0 - triple.m) * std::pow(f, 1.0 / a - 1.0);
}

GmScanReport gm_sign_scan(const RegionTriple& triple, std::span<const double> t_grid,
                          const EvalOptions& opts, double sign_tol) {
  if (t_grid.empty()) throw DomainError("gm_sign_scan: empty t grid");
  GmScanReport report;
  report.triple = triple;
  report.label = classify_region(triple);
  report.hypothesis_warning = !schur_hypothesis_holds(triple.mean);
  report.endpoints = g_m_endpoints(triple);

  report.gm_min = kInf;
  report.gm_max = -kInf;
  bool positive = false;
  bool negative = false;
  const auto note_sign = [&](double v) {
    positive = positive || v > sign_tol;
    negative = negative || v < -sign_tol;
  };

  int previous_sign = 0;
  for (double t : t_grid) {
    const double g = g_m(t, triple, opts);
    if (g < report.gm_min) {
      report.gm_min = g;
      report.t_at_min = t;
    }
    if (g > report.gm_max) {
      report.gm_max = g;
      report.t_at_max = t;
    }
    note_sign(g);
    const int sign = g > sign_tol ? 1 : (g < -sign_tol ? -1 : 0);
    if (sign != 0) {
      if (previous_sign != 0 && sign != previous_sign && !report.sign_change_t) {
        report.sign_change_t = t;
      }
      previous_sign = sign;
    }
  }

  for (double t : std::array{0.9, 0.99, 0.999}) {
    const double g = g_m(t, triple, opts);
    report.near_one.push_back(g);
    note_sign(g);
  }
  report.near_one_increasing =
      report.near_one[1] > report.near_one[0] && report.near_one[2] > report.near_one[1];

  // The endpoint limits are exact signs, so any nonzero value counts.
  positive = positive || report.endpoints.slope_at_zero > 0.0 ||
             report.endpoints.value_at_one > 0.0;
  negative = negative || report.endpoints.slope_at_zero < 0.0 ||
             report.endpoints.value_at_one < 0.0;
  report.mixed_sign = positive && negative;

  switch (report.label.label) {
    case Region::EPlus: report.consistent = report.gm_min >= -sign_tol; break;
    case Region::EMinus: report.consistent = report.gm_max <= sign_tol; break;
    case Region::Neither: report.consistent = report.mixed_sign; break;
  }
  return report;
}

}  // namespace schurmean
}  // namespace hyprec
