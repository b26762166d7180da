#include "hyprec/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace hyprec {

Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("not a rational or decimal literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    // [sign] digits / digits; GMP alone would also accept embedded blanks.
    const auto all_digits = [](std::string_view part) {
      return !part.empty() && std::all_of(part.begin(), part.end(), [](char ch) {
        return std::isdigit(static_cast<unsigned char>(ch)) != 0;
      });
    };
    std::string_view numerator = text.substr(0, slash);
    std::string_view sign;
    if (!numerator.empty() && (numerator.front() == '+' || numerator.front() == '-')) {
      sign = numerator.substr(0, 1);
      numerator.remove_prefix(1);
    }
    if (!all_digits(numerator) || !all_digits(text.substr(slash + 1))) fail();
    Rational value;
    const std::string canonical_text =
        std::string(sign == "-" ? "-" : "") + std::string(numerator) + "/" + std::string(text.substr(slash + 1));
    if (value.set_str(canonical_text, 10) != 0 || value.get_den() == 0) fail();
    // set_str does not canonicalize.
    value.canonicalize();
    return value;
  }

  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::string digits;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  long exponent = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits.push_back(text[i]);
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits.push_back(text[i]);
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    long e = 0;
    const char* begin = text.data() + i + 1;
    const char* end = text.data() + text.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, e);
    if (ec != std::errc() || ptr != end) fail();
    exponent += e;
    i = text.size();
  }
  if (i != text.size()) fail();
  if (exponent > 4000 || exponent < -4000) fail();

  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string format_double(double v) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), ptr);
}

std::string to_string(SeriesKind kind) {
  return kind == SeriesKind::Weighted ? "weighted" : "log-product";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Recurrence: return "recurrence";
    case Method::CauchyOracle: return "cauchy-oracle";
    case Method::ClosedForm: return "closed-form";
  }
  return "unknown";
}

namespace {

template <class T>
std::string sequence_json(const BasicCoeffSequence<T>& seq) {
  nlohmann::json doc;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const T& u : seq.coeffs) coeffs.push_back(format_value(u));
  doc["coeffs"] = std::move(coeffs);
  doc["kind"] = to_string(seq.kind);
  doc["method"] = to_string(seq.method);
  doc["spec"] = {{"a", format_value(seq.spec.params.a)},
                 {"b", format_value(seq.spec.params.b)},
                 {"c", format_value(seq.spec.params.c)},
                 {"p", format_value(seq.spec.p)},
                 {"theta", format_value(seq.spec.theta)}};
  return doc.dump(2) + "\n";
}

template <class T>
std::string sequence_csv(const BasicCoeffSequence<T>& seq) {
  std::ostringstream out;
  out << "n,u_n\n";
  for (std::size_t n = 0; n < seq.coeffs.size(); ++n) {
    out << n << ',' << format_value(seq.coeffs[n]) << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_json(const CoeffSequence& seq) { return sequence_json(seq); }
std::string to_json(const RationalCoeffSequence& seq) { return sequence_json(seq); }
std::string to_csv(const CoeffSequence& seq) { return sequence_csv(seq); }
std::string to_csv(const RationalCoeffSequence& seq) { return sequence_csv(seq); }

}  // namespace hyprec
