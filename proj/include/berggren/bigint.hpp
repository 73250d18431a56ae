#pragma once

// Arbitrary-precision scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace berggren {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint gcd(const bigint& a, const bigint& b) {
  return boost::multiprecision::gcd(a, b);
}

inline bigint abs(const bigint& a) { return a < 0 ? bigint(-a) : a; }

inline bool is_odd(const bigint& a) { return boost::multiprecision::bit_test(abs(a), 0); }
inline bool is_even(const bigint& a) { return !is_odd(a); }

// Floor square root for a >= 0.
inline bigint isqrt(const bigint& a) { return boost::multiprecision::sqrt(a); }

inline bool is_perfect_square(const bigint& a, bigint* root = nullptr) {
  if (a < 0) return false;
  bigint s = isqrt(a);
  if (root) *root = s;
  return s * s == a;
}

inline bigint pow(const bigint& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline double to_double(const bigint& a) { return a.convert_to<double>(); }
inline double to_double(const rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const bigint& a) { return a.str(); }

// Always "p/q" unless q == 1.
inline std::string to_string(const rational& q) {
  const bigint& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline rational make_rational(const bigint& num, const bigint& den) { return rational(num, den); }

inline bigint numerator(const rational& q) { return boost::multiprecision::numerator(q); }
inline bigint denominator(const rational& q) { return boost::multiprecision::denominator(q); }

// Strict decimal parse: optional leading '-', digits only.
inline bool parse_bigint(std::string_view text, bigint& out) {
  if (text.empty()) return false;
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  out = bigint(std::string(text));
  return true;
}

}  // namespace berggren
