#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include "boxhelly/errors.hpp"

namespace boxhelly {

// Exact rational arithmetic everywhere; no floating point touches geometry.
// cpp_rational keeps the canonical form (positive denominator, gcd 1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Canonical "p/q" form, e.g. "5/4", "-1/2", "2/1", "0/1".
inline std::string rat_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt ceil_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

inline BigInt floor_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;
  return q;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline BigInt parse_digits(std::string_view s, std::string_view original) {
  if (!all_digits(s))
    throw parse_error("bad rational literal '" + std::string(original) + "'");
  return BigInt(std::string(s));
}

}  // namespace detail

// Accepts "p", "p/q" and finite decimal strings ("1.25", "-.5"); every
// finite decimal converts exactly. Exponents and anything non-finite are
// rejected.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw parse_error("bad rational literal '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_digits(s.substr(0, slash), text);
    BigInt den = detail::parse_digits(s.substr(slash + 1), text);
    if (den == 0)
      throw parse_error("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw parse_error("bad rational literal '" + std::string(text) + "'");
    BigInt num = whole.empty() ? BigInt(0) : detail::parse_digits(whole, text);
    BigInt den = 1;
    if (!frac.empty()) {
      BigInt frac_num = detail::parse_digits(frac, text);
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      num = num * den + frac_num;
    }
    value = Rational(num, den);
  } else {
    value = Rational(detail::parse_digits(s, text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace boxhelly
