#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cuspcheck {

// Expression templates off: values are always materialised, so `auto` is safe.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q" into lowest terms. Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers) rendering.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Fixed-point decimal rendering with `digits` digits after the point.
std::string to_decimal(const Rational& value, int digits);

double to_double(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

RationalVector to_rational(std::span<const Integer> v);

Integer gcd_of(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);

/// Lexicographic comparison of rational points.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace cuspcheck
