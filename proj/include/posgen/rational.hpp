#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "posgen/error.hpp"

namespace posgen {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical reduced form
/// (gcd(num, den) = 1, den > 0) after every operation.
using Rational = boost::multiprecision::cpp_rational;

/// A point in Q^n.
using Point = std::vector<Rational>;

inline Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient at every step
  }
  return r;
}

inline Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) throw Error("invalid_argument", "negative exponent");
  Rational r = 1;
  Rational b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) { return r.str(); }

/// Strict parser for "p" / "p/q" with optional leading sign on p.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == from) fail();
    return i;
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_end = digits(pos);
  Integer num(std::string(text.substr(pos, num_end - pos)));
  if (negative) num = -num;
  if (num_end == text.size()) return Rational(num);
  if (text[num_end] != '/') fail();
  std::size_t den_end = digits(num_end + 1);
  if (den_end != text.size()) fail();
  Integer den(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace posgen
