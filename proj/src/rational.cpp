#include "cuspcheck/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational \"" + std::string(text) + "\"");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) {
    throw ParseError("invalid rational \"" + std::string(text) + "\": zero denominator");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Integer& value) { return value.str(); }

std::string to_decimal(const Rational& value, int digits) {
  digits = std::max(digits, 0);
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  Rational scaled = abs(value) * scale;
  // Round half away from zero.
  Integer rounded = (numerator(scaled) * 2 + denominator(scaled)) / (denominator(scaled) * 2);
  std::string int_part = (rounded / scale).str();
  std::string frac_part = (rounded % scale).str();
  std::string out = (value < 0 && rounded != 0) ? "-" : "";
  out += int_part;
  if (digits > 0) {
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac_part.size(), '0');
    out += frac_part;
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * b[i];
  return sum;
}

RationalVector to_rational(std::span<const Integer> v) { return RationalVector(v.begin(), v.end()); }

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace cuspcheck
