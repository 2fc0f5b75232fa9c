#include "cuspcheck/lattice.hpp"

#include <utility>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

namespace {

void swap_columns(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// col[a] <- col[a] - f * col[b]
void subtract_column(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}

void negate_column(IntegerMatrix& m, std::size_t a) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

// Floor division that rounds toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.cols());
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < h.rows() && pivot_col < h.cols(); ++r) {
    // Euclid on row r across columns pivot_col.. until only the pivot is nonzero.
    for (;;) {
      std::size_t best = h.cols();
      for (std::size_t c = pivot_col; c < h.cols(); ++c) {
        if (h(r, c) != 0 && (best == h.cols() || abs(h(r, c)) < abs(h(r, best)))) best = c;
      }
      if (best == h.cols()) break;
      if (best != pivot_col) {
        swap_columns(h, best, pivot_col);
        swap_columns(u, best, pivot_col);
      }
      bool done = true;
      for (std::size_t c = pivot_col + 1; c < h.cols(); ++c) {
        if (h(r, c) == 0) continue;
        const Integer q = h(r, c) / h(r, pivot_col);
        subtract_column(h, c, pivot_col, q);
        subtract_column(u, c, pivot_col, q);
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, pivot_col) == 0) continue;
    if (h(r, pivot_col) < 0) {
      negate_column(h, pivot_col);
      negate_column(u, pivot_col);
    }
    for (std::size_t c = 0; c < pivot_col; ++c) {
      const Integer q = floor_div(h(r, c), h(r, pivot_col));
      if (q == 0) continue;
      subtract_column(h, c, pivot_col, q);
      subtract_column(u, c, pivot_col, q);
    }
    ++pivot_col;
  }
  return {std::move(h), std::move(u)};
}

IntegerMatrix unimodular_completion(const IntegerVector& u) {
  if (!is_primitive(u)) throw NotPrimitive("unimodular completion needs a primitive vector");
  IntegerMatrix row(1, u.size());
  for (std::size_t j = 0; j < u.size(); ++j) row(0, j) = u[j];
  auto form = hermite_normal_form(row);
  if (form.hermite(0, 0) != 1) throw InvariantError("Hermite form of a primitive row must have pivot 1");
  return std::move(form.transform);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

}  // namespace cuspcheck
