#include "cuspcheck/polynomial.hpp"

#include <numeric>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

Rational AffineFunction::operator()(std::span<const Rational> x) const {
  if (x.size() != gradient.size()) throw DimensionMismatch("affine function evaluated at a point of wrong dimension");
  return constant + dot(gradient, x);
}

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t i) {
  if (i >= vars) throw DimensionMismatch("variable index out of range");
  Exponents e(vars, 0);
  e[i] = 1;
  return monomial(vars, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars) throw DimensionMismatch("monomial exponent vector has wrong length");
  Polynomial p(vars);
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::from_affine(const AffineFunction& a) {
  Polynomial p = constant(a.dim(), a.constant);
  for (std::size_t i = 0; i < a.dim(); ++i) p += variable(a.dim(), i) * a.gradient[i];
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::operator()(std::span<const Rational> x) const {
  if (x.size() != vars_) throw DimensionMismatch("polynomial evaluated at a point of wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::compose_affine(std::span<const Rational> origin, const RationalMatrix& basis) const {
  if (origin.size() != vars_ || basis.rows() != vars_) throw DimensionMismatch("compose_affine: size mismatch");
  const std::size_t m = basis.cols();
  std::vector<Polynomial> images;
  images.reserve(vars_);
  for (std::size_t i = 0; i < vars_; ++i) {
    Polynomial xi = constant(m, origin[i]);
    for (std::size_t k = 0; k < m; ++k) xi += variable(m, k) * basis(i, k);
    images.push_back(std::move(xi));
  }
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(m, c);
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.vars_ != vars_) throw DimensionMismatch("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.vars_ != vars_) throw DimensionMismatch("subtracting polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("multiplying polynomials in different numbers of variables");
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

}  // namespace cuspcheck
