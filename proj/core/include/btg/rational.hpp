#pragma once

// Exact integer and rational scalars used throughout the exact modules.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace btg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// Parses "p/q", an integer, or a finite decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

long double to_long_double(const Rational& r);
long double to_long_double(const Integer& z);

}  // namespace btg
