#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace nset {

// The only scalar types in the library. All arithmetic is exact; no
// floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms with positive denominator. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Largest integer <= x.
Integer floor_int(const Rational& x);

/// Smallest integer >= x.
Integer ceil_int(const Rational& x);

/// x - floor(x), in [0, 1).
Rational frac_part(const Rational& x);

/// gcd of all values; 0 for an empty list.
Integer gcd_all(const std::vector<Integer>& values);

/// "p/q" with q > 1, otherwise just "p".
std::string format_rational(const Rational& x);
std::string format_integer(const Integer& x);

/// Parses "p", "-p" or "p/q" (q > 0). Anything else (floats, exponents,
/// whitespace) is a SchemaViolation.
Rational parse_rational(const std::string& text);

/// Like parse_rational but rejects non-integers.
Integer parse_integer(const std::string& text);

}  // namespace nset
