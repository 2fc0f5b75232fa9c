#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cuspcheck/linalg.hpp"
#include "cuspcheck/rational.hpp"

namespace cuspcheck {

/// A(x) = constant + <gradient, x>.
struct AffineFunction {
  Rational constant;
  RationalVector gradient;

  std::size_t dim() const { return gradient.size(); }
  Rational operator()(std::span<const Rational> x) const;

  static AffineFunction zero(std::size_t n) { return {Rational(0), RationalVector(n, Rational(0))}; }

  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
};

/// Sparse multivariate polynomial with exact coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const Rational& c);
  static Polynomial variable(std::size_t vars, std::size_t i);
  static Polynomial monomial(std::size_t vars, Exponents exps, const Rational& c = 1);
  static Polynomial from_affine(const AffineFunction& a);

  std::size_t vars() const { return vars_; }
  /// -1 for the zero polynomial.
  int degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  Rational operator()(std::span<const Rational> x) const;

  /// q(origin + basis * y) as a polynomial in y.
  Polynomial compose_affine(std::span<const Rational> origin, const RationalMatrix& basis) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace cuspcheck
