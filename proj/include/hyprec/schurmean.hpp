#pragma once

// The hypergeometric mean
//   M(x, y) = [ (1/B(b,b)) int_0^1 (s x + (1-s) y)^a s^(b-1) (1-s)^(b-1) ds ]^(1/a)
//           = max(x,y) F(-a, b; 2b; 1 - min/max)^(1/a),     a in (0,1), b > 0,
// and the machinery that decides its Schur m-power convexity: the auxiliary
// function G_m, the parameter regions E+ / E-, the monotone ratio Q_p0 and
// the Gamma-ratio inequality.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyprec/coeffrec.hpp"
#include "hyprec/hypergeom.hpp"
#include "hyprec/numkit.hpp"

namespace hyprec {

/// Parameters of the mean: 0 < a < 1, b > 0.
struct MeanParams {
  double a = 0.5;
  double b = 1.0;
};

void validate(const MeanParams& mp);

/// A mean together with the power index m of the Schur condition.
struct RegionTriple {
  MeanParams mean;
  double m = 0.0;
};

enum class Region { EPlus, EMinus, Neither };

std::string to_string(Region region);

struct RegionLabel {
  Region label = Region::Neither;
  double m0 = 0.0;
  /// Clause of E+ / E- that fired, e.g. "a+b>=1>m". When both sets contain
  /// the point (their shared boundary) the tags are joined with " & " and
  /// `in_both` is set; `label` is then EPlus.
  std::string branch;
  bool in_both = false;
};

/// Parameters in the coordinates of the Q_p0 monotonicity statement:
/// a in (0,1), b > 0, p0 = a / (2b + 1). The Schur analysis uses them with
/// a replaced by 1 - a; see lemma3_params_for_theorem4.
template <class T>
struct BasicLemma3Params {
  T a;
  T b;
};

using Lemma3Params = BasicLemma3Params<double>;

struct EvalOptions {
  double tol = 1e-15;
  std::size_t term_cap = hypergeom::kDefaultTermCap;
  double quad_tol = numkit::kDefaultQuadTol;
};

namespace schurmean {

/// Threshold m0 = (a + 2b) / (1 + 2b).
double threshold_m0(const MeanParams& mp);

/// Series form y F(-a, b; 2b; 1 - x/y)^(1/a) with y = max(x, y).
double mean_series(double x, double y, const MeanParams& mp, const EvalOptions& opts = {});

/// Integral form via weighted_quad, normalized by B(b, b).
double mean_quadrature(double x, double y, const MeanParams& mp, const EvalOptions& opts = {});

/// G_m(t) = F(1-a, b; 2b+1; t) - (1-t)^(1-m) F(1-a, b+1; 2b+1; t), 0 < t < 1.
double g_m(double t, const RegionTriple& triple, const EvalOptions& opts = {});

/// G_m(t) = F(1-a, b; 2b+1; t) - (1-t)^(a+b-m) F(a+2b, b; 2b+1; t); requires a + b < 1.
double g_m_alt(double t, const RegionTriple& triple, const EvalOptions& opts = {});

/// 2 F(-a, b; 2b; t) - (1-t) F(1-a, b+1; 2b+1; t) - F(1-a, b; 2b+1; t).
double g_m_series_reduction_residual(double t, const RegionTriple& triple,
                                     const EvalOptions& opts = {});

/// Limits of G_m at the ends of (0, 1): G_m(t)/t -> m0 - m as t -> 0, and
/// the value G_m(1-) (finite, +inf or -inf) by the case split on a + b
/// against 1 and on the exponent of (1-t).
struct GmEndpoints {
  double slope_at_zero = 0.0;
  double value_at_one = 0.0;
  std::string case_tag;
};

GmEndpoints g_m_endpoints(const RegionTriple& triple);

/// Literal evaluation of the E+ and E- set predicates; comparisons are
/// exact on the given doubles.
RegionLabel classify_region(const RegionTriple& triple);

/// Reclassifies at m -/+ eps; `boundary` is set when the three labels differ.
struct FuzzedRegion {
  RegionLabel label;
  bool boundary = false;
};

FuzzedRegion classify_region_fuzzed(const RegionTriple& triple, double eps = 1e-9);

/// The convexity characterisation is stated for a + b >= 1/2.
bool schur_hypothesis_holds(const MeanParams& mp);

/// {0.02 k : k = 1..49}.
std::vector<double> default_t_grid();

/// Maps (a, b) of the mean to Lemma-3 coordinates (1 - a, b); in these
/// coordinates p0 equals 1 - m0.
Lemma3Params lemma3_params_for_theorem4(const MeanParams& mp);

double lemma3_p0(const Lemma3Params& lp);

/// Q_p0(t) = (1-t)^(-p0) F(a, b; 2b+1; t) / F(a, b+1; 2b+1; t) on the grid.
std::vector<double> q_p0_profile(const Lemma3Params& lp, std::span<const double> t_grid,
                                 const EvalOptions& opts = {});

/// F(a, b; 2b+1; t) - (1-t)^p0 F(a, b+1; 2b+1; t).
double lemma3_inequality_margin(const Lemma3Params& lp, double t, const EvalOptions& opts = {});

/// d_n = u_{n+1} - (v_{n+1}/v_n) u_n for n = 0..N where u are the
/// coefficients of (1-t)^(-p0) F(a, b; 2b+1; t) and v those of
/// F(a, b+1; 2b+1; t), plus the first-order recursion
/// d_n = alpha'_n d_{n-1} + beta'_n u_{n-1} that propagates their sign.
template <class T>
struct DnReport {
  std::vector<T> d;                   ///< d_0..d_N
  std::vector<T> alpha_prime;         ///< index n, n = 1..N (entry 0 unused)
  std::vector<T> beta_prime;          ///< index n, n = 1..N (entry 0 unused)
  std::vector<T> alpha_prime_closed;  ///< closed-form alpha'_n
  std::vector<T> beta_prime_closed;   ///< closed-form beta'_n
  std::vector<T> recursion_residual;  ///< d_n - alpha'_n d_{n-1} - beta'_n u_{n-1}
  std::vector<std::size_t> alpha_prime_nonpositive;  ///< n with alpha'_n <= 0
};

template <class T>
DnReport<T> q_p0_dn_sequence(const BasicLemma3Params<T>& lp, std::size_t N);

/// Gamma(a+b)/Gamma(a+2b) - Gamma(1-a-b)/Gamma(1-a) for 0 < a < a+b < 1.
double gamma_inequality_margin(double a, double b);

/// (y-x) (y^(1-m) dM/dy - x^(1-m) dM/dx) with numerically differentiated
/// partials of mean_series (step 1e-4 max(x, y), three Richardson levels).
double schur_condition_sample(double x, double y, const RegionTriple& triple,
                              const EvalOptions& opts = {});

/// The positive factor (y-x)/2 y^(1-m) F(-a,b;2b;t)^(1/a-1) (y > x, t = 1 - x/y)
/// relating schur_condition_sample to G_m(t).
double schur_factor(double x, double y, const RegionTriple& triple,
                    const EvalOptions& opts = {});

struct GmScanReport {
  RegionTriple triple;
  RegionLabel label;
  double gm_min = 0.0;
  double gm_max = 0.0;
  double t_at_min = 0.0;
  double t_at_max = 0.0;
  /// G_m at t = 0.9, 0.99, 0.999.
  std::vector<double> near_one;
  /// Whether G_m grows across the near-one probes.
  bool near_one_increasing = false;
  GmEndpoints endpoints;
  /// First grid point whose sign differs from its predecessor's.
  std::optional<double> sign_change_t;
  /// Strictly positive and strictly negative evidence among grid values,
  /// near-one probes and the two endpoint limits.
  bool mixed_sign = false;
  /// EPlus: gm_min >= -tol; EMinus: gm_max <= tol; Neither: mixed_sign.
  bool consistent = false;
  /// Set when a + b < 1/2, outside the hypothesis of the characterisation.
  bool hypothesis_warning = false;
};

GmScanReport gm_sign_scan(const RegionTriple& triple, std::span<const double> t_grid,
                          const EvalOptions& opts = {}, double sign_tol = 1e-8);

}  // namespace schurmean
}  // namespace hyprec
