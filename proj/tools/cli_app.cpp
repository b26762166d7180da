#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hyprec/coeffrec.hpp"
#include "hyprec/errors.hpp"
#include "hyprec/format.hpp"
#include "hyprec/hypergeom.hpp"
#include "hyprec/numeric.hpp"
#include "hyprec/schurmean.hpp"
#include "hyprec/verify.hpp"

namespace hyprec::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numeric flag value kept both exactly and as the nearest double.
struct Number {
  Rational exact;
  double value = 0.0;
  bool fraction = false;
};

Number parse_number(const std::string& flag, const std::string& text) {
  Number n;
  try {
    n.exact = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + flag + ": not a decimal or p/q literal: '" + text + "'");
  }
  n.fraction = text.find('/') != std::string::npos;
  if (n.fraction) {
    n.value = to_double(n.exact);
  } else {
    std::string_view digits(text);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n.value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(n.value)) {
      throw UsageError("--" + flag + ": value out of range: '" + text + "'");
    }
  }
  return n;
}

std::vector<double> parse_list(const std::string& flag, const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_number(flag, item).value);
  if (values.empty()) throw UsageError("--" + flag + ": empty list");
  return values;
}

struct Environment {
  std::size_t term_cap = hypergeom::kDefaultTermCap;
  double quad_tol = numkit::kDefaultQuadTol;
};

Environment read_environment() {
  Environment env;
  if (const char* raw = std::getenv("HYPREC_TERM_CAP"); raw != nullptr && *raw != '\0') {
    const std::string_view s(raw);
    std::size_t cap = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc() || ptr != s.data() + s.size() || cap == 0) {
      throw UsageError("HYPREC_TERM_CAP must be a positive integer, got '" + std::string(s) + "'");
    }
    env.term_cap = cap;
  }
  if (const char* raw = std::getenv("HYPREC_QUAD_TOL"); raw != nullptr && *raw != '\0') {
    const std::string_view s(raw);
    double tol = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), tol);
    if (ec != std::errc() || ptr != s.data() + s.size() || !(tol > 0.0) || !std::isfinite(tol)) {
      throw UsageError("HYPREC_QUAD_TOL must be a positive number, got '" + std::string(s) + "'");
    }
    env.quad_tol = tol;
  }
  return env;
}

void check_c(const Number& c) {
  const double nearest = std::round(c.value);
  if (is_nonpositive_integer(c.exact) || (nearest <= 0.0 && std::fabs(c.value - nearest) <= 1e-12)) {
    throw UsageError("--c must not be 0, -1, -2, ... (got " + format_double(c.value) + ")");
  }
}

void check_theta(const Number& theta) {
  if (theta.exact < -1 || theta.exact > 1) {
    throw UsageError("--theta must lie in [-1, 1] (got " + format_double(theta.value) + ")");
  }
}

MeanParams mean_params(const Number& a, const Number& b) {
  const MeanParams mp{a.value, b.value};
  if (!(mp.a > 0.0 && mp.a < 1.0)) throw UsageError("--a must lie in (0, 1) for the mean");
  if (!(mp.b > 0.0)) throw UsageError("--b must be positive for the mean");
  return mp;
}

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- coeffs

struct CoeffsArgs {
  std::string a, b, c;
  std::string p = "0";
  std::string theta = "1";
  std::string method = "recurrence";
  std::size_t n = 64;
  bool rational = false;
  std::string format = "plain";
};

template <class T>
BasicCoeffSequence<T> compute_coeffs(const CoeffsArgs& args, const BasicHypParams<T>& params,
                                     const T& p, const T& theta) {
  const BasicWeightedSeriesSpec<T> spec{params, p, theta};
  if (args.method == "recurrence") return coeffrec::u_general(spec, args.n);
  if (args.method == "oracle") return coeffrec::cauchy_oracle(spec, args.n);
  if (args.method == "theta-plus1") return coeffrec::u_theta_plus1(params, p, args.n);
  if (args.method == "theta-minus1") return coeffrec::u_theta_minus1(params, p, args.n);
  if (args.method == "log") return coeffrec::v_log_product(params, args.n);
  return coeffrec::log_convolution_oracle(params, args.n);
}

template <class T>
std::string render_coeffs(const BasicCoeffSequence<T>& seq, const std::string& format) {
  if (format == "csv") return to_csv(seq);
  if (format == "json") return to_json(seq);
  std::string text;
  const char* symbol = seq.kind == SeriesKind::LogProduct ? "v_" : "u_";
  for (std::size_t n = 0; n < seq.coeffs.size(); ++n) {
    text += symbol + std::to_string(n) + " = " + format_value(seq.coeffs[n]) + "\n";
  }
  return text;
}

int run_coeffs(const CoeffsArgs& args, std::ostream& out) {
  if (args.n > coeffrec::kMaxTerms) {
    throw UsageError("--n must not exceed " + std::to_string(coeffrec::kMaxTerms));
  }
  const Number a = parse_number("a", args.a);
  const Number b = parse_number("b", args.b);
  const Number c = parse_number("c", args.c);
  const Number p = parse_number("p", args.p);
  const Number theta = parse_number("theta", args.theta);
  check_c(c);
  check_theta(theta);
  const bool exact = args.rational || a.fraction || b.fraction || c.fraction || p.fraction ||
                     theta.fraction;
  if (exact) {
    const auto seq = compute_coeffs<Rational>(args, {a.exact, b.exact, c.exact}, p.exact, theta.exact);
    out << render_coeffs(seq, args.format);
  } else {
    const auto seq = compute_coeffs<double>(args, {a.value, b.value, c.value}, p.value, theta.value);
    out << render_coeffs(seq, args.format);
  }
  return kOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string a, b, c, x;
  bool derivative = false;
  double tol = 1e-15;
  std::string format = "json";
};

int run_eval(const EvalArgs& args, const Environment& env, std::ostream& out) {
  const Number c = parse_number("c", args.c);
  check_c(c);
  const HypParams params{parse_number("a", args.a).value, parse_number("b", args.b).value, c.value};
  const double x = parse_number("x", args.x).value;
  if (!(args.tol > 0.0)) throw UsageError("--tol must be positive");
  const EvalResult r = args.derivative ? hypergeom::hyp2f1_derivative(params, x, args.tol, env.term_cap)
                                       : hypergeom::hyp2f1(params, x, args.tol, env.term_cap);
  if (args.format == "plain") {
    out << format_double(r.value) << "\n";
  } else {
    out << json_text({{"derivative", args.derivative},
                      {"error_bound", r.error_bound},
                      {"terms_used", r.terms_used},
                      {"value", r.value}});
  }
  return kOk;
}

// ---------------------------------------------------------------- near-one

struct NearOneArgs {
  std::string a, b, c;
  std::optional<std::string> x;
  double tol = 1e-15;
};

int run_near_one(const NearOneArgs& args, const Environment& env, std::ostream& out) {
  const Number c = parse_number("c", args.c);
  check_c(c);
  const HypParams params{parse_number("a", args.a).value, parse_number("b", args.b).value, c.value};
  const double excess = params.c - params.a - params.b;
  std::optional<double> x;
  if (args.x) x = parse_number("x", *args.x).value;

  json doc;
  doc["exponent"] = excess;
  if (excess > 0.0) {
    doc["case"] = "c>a+b";
    doc["value_at_one"] = hypergeom::gauss_value_at_one(params);
    if (x) doc["series"] = hypergeom::hyp2f1(params, *x, args.tol, env.term_cap).value;
  } else {
    if (!x) throw UsageError("--x is required when c <= a+b");
    const double direct = hypergeom::hyp2f1(params, *x, args.tol, env.term_cap).value;
    doc["series"] = direct;
    if (excess == 0.0) {
      doc["case"] = "c=a+b";
      const double asymptote = hypergeom::zero_balanced_asymptote(params.a, params.b, *x);
      doc["asymptote"] = asymptote;
      doc["difference"] = direct - asymptote;
    } else {
      doc["case"] = "c<a+b";
      const EvalResult euler = hypergeom::euler_transform_eval(params, *x, args.tol, env.term_cap);
      doc["euler"] = euler.value;
      doc["difference"] = direct - euler.value;
      const HypParams shifted{params.c - params.a, params.c - params.b, params.c};
      if (shifted.c > shifted.a + shifted.b) {
        // F ~ (1-x)^(c-a-b) F(c-a, c-b; c; 1) as x -> 1.
        doc["leading"] = std::pow(1.0 - *x, excess) * hypergeom::gauss_value_at_one(shifted);
      }
    }
  }
  out << json_text(doc);
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::string format = "plain";
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  const auto suite = verify::parse_suite(args.suite);
  if (!suite) throw UsageError("--suite: unknown suite '" + args.suite + "'");
  const verify::Summary summary = verify::run(*suite, args.seed);
  out << (args.format == "json" ? verify::render_json(summary) : verify::render_plain(summary));
  return summary.count(verify::Status::Fail) == 0 ? kOk : kInternal;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string a, b, m;
  bool fuzz = false;
  double eps = 1e-9;
};

int run_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  const MeanParams mp = mean_params(parse_number("a", args.a), parse_number("b", args.b));
  const RegionTriple triple{mp, parse_number("m", args.m).value};
  if (!schurmean::schur_hypothesis_holds(mp)) {
    err << "warning: a+b < 1/2 lies outside the hypothesis of the characterisation\n";
  }
  json doc;
  RegionLabel label;
  if (args.fuzz) {
    if (!(args.eps > 0.0)) throw UsageError("--eps must be positive");
    const auto fuzzed = schurmean::classify_region_fuzzed(triple, args.eps);
    label = fuzzed.label;
    doc["boundary"] = fuzzed.boundary;
  } else {
    label = schurmean::classify_region(triple);
  }
  doc["label"] = to_string(label.label);
  doc["m0"] = label.m0;
  doc["branch"] = label.branch;
  if (label.in_both) doc["in_both"] = true;
  out << json_text(doc);
  return kOk;
}

// ---------------------------------------------------------------- mean

struct MeanArgs {
  std::string a, b, x, y;
  std::string method = "both";
};

int run_mean(const MeanArgs& args, const Environment& env, std::ostream& out) {
  const MeanParams mp = mean_params(parse_number("a", args.a), parse_number("b", args.b));
  const double x = parse_number("x", args.x).value;
  const double y = parse_number("y", args.y).value;
  if (!(x > 0.0 && y > 0.0)) throw UsageError("--x and --y must be positive");
  EvalOptions opts;
  opts.term_cap = env.term_cap;
  opts.quad_tol = env.quad_tol;
  json doc;
  std::optional<double> series, quad;
  if (args.method != "quadrature") series = schurmean::mean_series(x, y, mp, opts);
  if (args.method != "series") quad = schurmean::mean_quadrature(x, y, mp, opts);
  if (series) doc["series"] = *series;
  if (quad) doc["quadrature"] = *quad;
  if (series && quad) doc["difference"] = *series - *quad;
  out << json_text(doc);
  return kOk;
}

// ---------------------------------------------------------------- gm-scan

struct GmScanArgs {
  std::optional<std::string> a, b, m;
  bool grid = false;
  bool include_outside = false;
  std::string format = "csv";
};

std::string csv_header() { return "a,b,m,label,branch,gm_min,gm_max\n"; }

std::string csv_row(const schurmean::GmScanReport& r) {
  return format_double(r.triple.mean.a) + "," + format_double(r.triple.mean.b) + "," +
         format_double(r.triple.m) + "," + to_string(r.label.label) + "," + r.label.branch + "," +
         format_double(r.gm_min) + "," + format_double(r.gm_max) + "\n";
}

json report_json(const schurmean::GmScanReport& r) {
  json doc;
  doc["a"] = r.triple.mean.a;
  doc["b"] = r.triple.mean.b;
  doc["m"] = r.triple.m;
  doc["label"] = to_string(r.label.label);
  doc["branch"] = r.label.branch;
  doc["m0"] = r.label.m0;
  doc["gm_min"] = r.gm_min;
  doc["gm_max"] = r.gm_max;
  doc["t_at_min"] = r.t_at_min;
  doc["t_at_max"] = r.t_at_max;
  doc["near_one"] = r.near_one;
  doc["near_one_increasing"] = r.near_one_increasing;
  doc["slope_at_zero"] = r.endpoints.slope_at_zero;
  // JSON has no infinities; the limit at 1 is written as a string then.
  if (std::isfinite(r.endpoints.value_at_one)) {
    doc["value_at_one"] = r.endpoints.value_at_one;
  } else {
    doc["value_at_one"] = r.endpoints.value_at_one > 0 ? "+inf" : "-inf";
  }
  doc["endpoint_case"] = r.endpoints.case_tag;
  doc["sign_change_t"] = r.sign_change_t ? json(*r.sign_change_t) : json(nullptr);
  doc["mixed_sign"] = r.mixed_sign;
  doc["consistent"] = r.consistent;
  doc["hypothesis_warning"] = r.hypothesis_warning;
  return doc;
}

int run_gm_scan(const GmScanArgs& args, const Environment& env, std::ostream& out,
                std::ostream& err) {
  EvalOptions opts;
  opts.term_cap = env.term_cap;
  opts.quad_tol = env.quad_tol;
  std::vector<RegionTriple> triples;
  if (args.grid) {
    if (args.a || args.b || args.m) throw UsageError("--grid cannot be combined with --a/--b/--m");
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        for (int k = 0; k < 10; ++k) {
          const RegionTriple t{{0.05 + 0.1 * i, 0.2 * (j + 1)}, -0.5 + 2.0 * k / 9.0};
          if (args.include_outside || schurmean::schur_hypothesis_holds(t.mean)) triples.push_back(t);
        }
      }
    }
  } else {
    if (!args.a || !args.b || !args.m) throw UsageError("gm-scan needs --a, --b and --m, or --grid");
    const MeanParams mp = mean_params(parse_number("a", *args.a), parse_number("b", *args.b));
    triples.push_back({mp, parse_number("m", *args.m).value});
    if (!schurmean::schur_hypothesis_holds(mp)) {
      err << "warning: a+b < 1/2 lies outside the hypothesis of the characterisation\n";
    }
  }
  const auto t_grid = schurmean::default_t_grid();
  std::vector<schurmean::GmScanReport> reports;
  reports.reserve(triples.size());
  for (const auto& t : triples) reports.push_back(schurmean::gm_sign_scan(t, t_grid, opts));

  if (args.format == "json") {
    if (args.grid) {
      json list = json::array();
      for (const auto& r : reports) list.push_back(report_json(r));
      out << json_text(list);
    } else {
      out << json_text(report_json(reports.front()));
    }
  } else {
    out << csv_header();
    for (const auto& r : reports) out << csv_row(r);
  }
  return kOk;
}

// ---------------------------------------------------------------- qprofile

struct QProfileArgs {
  std::string a, b;
  std::string t = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::optional<std::size_t> dn;
  bool rational = false;
};

template <class T>
json dn_json(const BasicLemma3Params<T>& lp, std::size_t N) {
  const auto report = schurmean::q_p0_dn_sequence(lp, N);
  json d = json::array();
  for (const auto& v : report.d) d.push_back(format_value(v));
  bool closed_ok = true;
  for (std::size_t n = 1; n < report.alpha_prime.size(); ++n) {
    closed_ok = closed_ok && std::fabs(to_double(T(report.alpha_prime[n] - report.alpha_prime_closed[n]))) <=
                                 1e-12 * std::max(1.0, std::fabs(to_double(report.alpha_prime[n])));
  }
  return {{"d", d},
          {"alpha_prime_nonpositive", report.alpha_prime_nonpositive},
          {"closed_forms_agree", closed_ok}};
}

int run_qprofile(const QProfileArgs& args, std::ostream& out) {
  const Number a = parse_number("a", args.a);
  const Number b = parse_number("b", args.b);
  if (!(a.value > 0.0 && a.value < 1.0) || !(b.value > 0.0)) {
    throw UsageError("--a must lie in (0, 1) and --b must be positive");
  }
  const Lemma3Params lp{a.value, b.value};
  const std::vector<double> t = parse_list("t", args.t);
  for (double v : t) {
    if (!(v > 0.0 && v < 1.0)) throw UsageError("--t values must lie in (0, 1)");
  }
  json doc;
  doc["p0"] = schurmean::lemma3_p0(lp);
  doc["t"] = t;
  doc["q"] = schurmean::q_p0_profile(lp, t);
  json margin = json::array();
  for (double v : t) margin.push_back(schurmean::lemma3_inequality_margin(lp, v));
  doc["margin"] = margin;
  if (args.dn) {
    if (*args.dn > coeffrec::kMaxTerms) {
      throw UsageError("--dn must not exceed " + std::to_string(coeffrec::kMaxTerms));
    }
    const bool exact = args.rational || a.fraction || b.fraction;
    doc["dn"] = exact ? dn_json(BasicLemma3Params<Rational>{a.exact, b.exact}, *args.dn)
                      : dn_json(lp, *args.dn);
  }
  out << json_text(doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric coefficient recurrences and Schur power convexity of the hypergeometric mean",
               "hyprec"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Series coefficients of (1-theta x)^p F or ln(1-x) F");
  coeffs_cmd->add_option("--a", coeffs.a)->required();
  coeffs_cmd->add_option("--b", coeffs.b)->required();
  coeffs_cmd->add_option("--c", coeffs.c)->required();
  coeffs_cmd->add_option("--p", coeffs.p, "weight exponent")->capture_default_str();
  coeffs_cmd->add_option("--theta", coeffs.theta, "weight scale in [-1, 1]")->capture_default_str();
  coeffs_cmd->add_option("--method", coeffs.method)
      ->check(CLI::IsMember({"recurrence", "oracle", "theta-plus1", "theta-minus1", "log", "log-oracle"}))
      ->capture_default_str();
  coeffs_cmd->add_option("--n", coeffs.n, "highest index")->capture_default_str();
  coeffs_cmd->add_flag("--rational", coeffs.rational, "exact rational arithmetic");
  coeffs_cmd->add_option("--format", coeffs.format)
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate F(a, b; c; x) for |x| < 1");
  eval_cmd->add_option("--a", eval.a)->required();
  eval_cmd->add_option("--b", eval.b)->required();
  eval_cmd->add_option("--c", eval.c)->required();
  eval_cmd->add_option("--x", eval.x)->required();
  eval_cmd->add_flag("--derivative", eval.derivative, "evaluate dF/dx instead");
  eval_cmd->add_option("--tol", eval.tol)->capture_default_str();
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  NearOneArgs near_one;
  auto* near_cmd = app.add_subcommand("near-one", "Behaviour of F(a, b; c; x) as x -> 1");
  near_cmd->add_option("--a", near_one.a)->required();
  near_cmd->add_option("--b", near_one.b)->required();
  near_cmd->add_option("--c", near_one.c)->required();
  near_cmd->add_option("--x", near_one.x, "evaluation point, required when c <= a+b");
  near_cmd->add_option("--tol", near_one.tol)->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", verify_args.suite)
      ->check(CLI::IsMember({"recurrence", "corollaries", "special-cases", "mean", "regions", "lemma3", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed)->capture_default_str();
  verify_cmd->add_option("--format", verify_args.format)
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "Locate (a, b, m) in the regions E+ / E-");
  classify_cmd->add_option("--a", classify.a)->required();
  classify_cmd->add_option("--b", classify.b)->required();
  classify_cmd->add_option("--m", classify.m)->required();
  classify_cmd->add_flag("--fuzz", classify.fuzz, "also classify at m -/+ eps and flag boundaries");
  classify_cmd->add_option("--eps", classify.eps)->capture_default_str();

  MeanArgs mean;
  bool mean_rational = false;
  auto* mean_cmd = app.add_subcommand("mean", "Evaluate the hypergeometric mean M(x, y)");
  mean_cmd->add_option("--a", mean.a)->required();
  mean_cmd->add_option("--b", mean.b)->required();
  mean_cmd->add_option("--x", mean.x)->required();
  mean_cmd->add_option("--y", mean.y)->required();
  mean_cmd->add_option("--method", mean.method)
      ->check(CLI::IsMember({"series", "quadrature", "both"}))
      ->capture_default_str();
  mean_cmd->add_flag("--rational", mean_rational, "not supported");

  GmScanArgs scan;
  bool scan_rational = false;
  auto* scan_cmd = app.add_subcommand("gm-scan", "Sign scan of G_m on (0, 1)");
  scan_cmd->add_option("--a", scan.a);
  scan_cmd->add_option("--b", scan.b);
  scan_cmd->add_option("--m", scan.m);
  scan_cmd->add_flag("--grid", scan.grid, "scan the 10x10x10 parameter grid");
  scan_cmd->add_flag("--include-outside", scan.include_outside, "keep grid points with a+b < 1/2");
  scan_cmd->add_option("--format", scan.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  scan_cmd->add_flag("--rational", scan_rational, "not supported");

  QProfileArgs qprofile;
  auto* q_cmd = app.add_subcommand("qprofile", "Profile of Q_p0 and the d_n sequence");
  q_cmd->add_option("--a", qprofile.a)->required();
  q_cmd->add_option("--b", qprofile.b)->required();
  q_cmd->add_option("--t", qprofile.t, "comma-separated points in (0, 1)")->capture_default_str();
  q_cmd->add_option("--dn", qprofile.dn, "also report d_0..d_N");
  q_cmd->add_flag("--rational", qprofile.rational, "exact d_n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    const Environment env = read_environment();
    if (*coeffs_cmd) return run_coeffs(coeffs, out);
    if (*eval_cmd) return run_eval(eval, env, out);
    if (*near_cmd) return run_near_one(near_one, env, out);
    if (*verify_cmd) return run_verify(verify_args, out);
    if (*classify_cmd) return run_classify(classify, out, err);
    if (*mean_cmd) {
      if (mean_rational) throw UsageError("mean does not support --rational");
      return run_mean(mean, env, out);
    }
    if (*scan_cmd) {
      if (scan_rational) throw UsageError("gm-scan does not support --rational");
      return run_gm_scan(scan, env, out, err);
    }
    if (*q_cmd) return run_qprofile(qprofile, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kNumerical;
  } catch (const NonConvergence& e) {
    err << "no convergence: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "internal error: no subcommand dispatched\n";
  return kInternal;
}

}  // namespace hyprec::cli
