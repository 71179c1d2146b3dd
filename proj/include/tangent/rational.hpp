#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace tangent {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a plain decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is one).
std::string to_string(const Rational& value);

/// Every finite double is a dyadic rational; this conversion is exact.
Rational exact_rational(double value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

inline double magnitude(double value) { return std::abs(value); }
inline double magnitude(const Rational& value) { return std::abs(value.get_d()); }

inline bool is_zero(double value) { return value == 0.0; }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

template <class S>
S ipow(S base, unsigned exponent) {
  S result(1);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

template <class S>
S from_bigint(const BigInt& value) {
  if constexpr (std::is_same_v<S, double>) {
    return value.get_d();
  } else {
    return S(value);
  }
}

/// Binomial coefficient (n choose k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Exact square root of a rational that is a perfect square, or false.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace tangent
