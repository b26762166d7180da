#pragma once

// Field abstraction shared by the floating and exact-rational code paths.
// Generic algorithms are written against `T` and instantiated for `double`
// and `Rational`; the handful of operations that differ between the two live
// here as overloads.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace hyprec {

/// Exact rational number, always kept in canonical form (gcd 1, den > 0).
using Rational = mpq_class;

inline double to_double(double v) { return v; }
// mpq get_d truncates; when numerator and denominator are exact doubles a
// single division gives the correctly rounded value.
inline double to_double(const Rational& v) {
  if (mpz_sizeinbase(v.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(v.get_den_mpz_t(), 2) <= 53) {
    return v.get_num().get_d() / v.get_den().get_d();
  }
  return v.get_d();
}

inline double abs_value(double v) { return std::fabs(v); }
inline Rational abs_value(const Rational& v) { return abs(v); }

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

/// True for 0, -1, -2, ...
inline bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::floor(v) == v;
}
inline bool is_nonpositive_integer(const Rational& v) {
  return sgn(v) <= 0 && v.get_den() == 1;
}

/// Parses "p/q", an integer, or a finite decimal ("0.3", "-1.25e-2") exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when den == 1.
std::string format_rational(const Rational& v);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

inline std::string format_value(double v) { return format_double(v); }
inline std::string format_value(const Rational& v) { return format_rational(v); }

/// Relative comparison with an absolute floor:
/// |x - y| <= max(rel * max(|x|, |y|), floor).
inline bool close_rel(double x, double y, double rel, double floor) {
  const double scale = std::fmax(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) <= std::fmax(rel * scale, floor);
}

/// The quantity tested by close_rel, i.e. |x - y| / max(scale, floor / rel).
inline double rel_error(double x, double y, double rel_floor_ratio) {
  const double scale = std::fmax(std::fmax(std::fabs(x), std::fabs(y)), rel_floor_ratio);
  return std::fabs(x - y) / scale;
}

}  // namespace hyprec
