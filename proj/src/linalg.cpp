#include "cuspcheck/linalg.hpp"

#include <utility>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: sizes differ");
  RationalVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

namespace {

// In-place Bareiss elimination on an integer matrix with `pivot_cols`
// columns eligible for pivoting. Returns the sign flips from row swaps, or 0
// if a pivot column is entirely zero (matrix singular on those columns).
int bareiss(IntegerMatrix& m, std::size_t pivot_cols) {
  const std::size_t n = m.rows();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n && k < pivot_cols; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign;
}

// Scales each row of [m | extra] by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m, std::span<const Rational> extra) {
  const bool with_rhs = !extra.empty();
  IntegerMatrix out(m.rows(), m.cols() + (with_rhs ? 1 : 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    if (with_rhs) l = boost::multiprecision::lcm(l, denominator(extra[i]));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    if (with_rhs) out(i, m.cols()) = numerator(extra[i]) * (l / denominator(extra[i]));
  }
  return out;
}

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerMatrix work = m;
  const int sign = bareiss(work, work.cols());
  if (sign == 0) return 0;
  return sign * work(m.rows() - 1, m.cols() - 1);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    scale *= l;
  }
  return Rational(determinant(clear_denominators(m, {}))) / Rational(scale);
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return rref(work).size();
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw DimensionMismatch("solve: expected a square system");
  if (n == 0) return RationalVector{};
  IntegerMatrix aug = clear_denominators(m, rhs);
  if (bareiss(aug, n) == 0 || aug(n - 1, n - 1) == 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(aug(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(aug(ii, j)) * x[j];
    x[ii] = acc / Rational(aug(ii, ii));
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::optional<IntegerMatrix> integer_inverse(const IntegerMatrix& m) {
  const auto inv = inverse(to_rational(m));
  if (!inv) return std::nullopt;
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator((*inv)(i, j)) != 1) return std::nullopt;
      out(i, j) = numerator((*inv)(i, j));
    }
  return out;
}

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  RationalMatrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_column_space(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw DimensionMismatch("in_column_space: vector length differs from row count");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  return rank(aug) == rank(m);
}

RationalVector orthogonal_residual(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw DimensionMismatch("orthogonal_residual: vector length differs from row count");
  RationalVector residual(v.begin(), v.end());
  if (m.cols() == 0) return residual;
  // Project onto an independent subset of columns via the normal equations.
  RationalMatrix work = m;
  const auto pivots = rref(work);
  RationalMatrix basis(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = m(i, pivots[k]);
  const RationalMatrix bt = basis.transpose();
  const auto coeffs = solve(bt * basis, bt * v);
  if (!coeffs) throw InvariantError("orthogonal_residual: Gram matrix of independent columns is singular");
  const RationalVector proj = basis * *coeffs;
  for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= proj[i];
  return residual;
}

bool is_positive_definite(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

}  // namespace cuspcheck
