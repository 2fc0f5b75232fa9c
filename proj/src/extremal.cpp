#include "cuspcheck/extremal.hpp"

#include <algorithm>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

ExtremalSolveReport extremal_affine(const DelzantPolytope& p, std::span<const std::size_t> excluded) {
  const std::size_t n = p.dim();
  const MomentData interior = polytope_moments(p);
  if (interior.volume <= 0) throw DegeneratePolytope("polytope has zero volume");
  const BoundaryMomentData boundary = boundary_moments(p, excluded);

  ExtremalSolveReport report;
  report.excluded = boundary.excluded;
  report.multi_facet_exclusion = boundary.excluded.size() > 1;
  report.gram = interior.gram();
  report.rhs.resize(n + 1);
  report.rhs[0] = boundary.total_measure();
  const RationalVector first = boundary.total_first_moments();
  for (std::size_t i = 0; i < n; ++i) report.rhs[i + 1] = first.empty() ? Rational(0) : first[i];

  const auto coeffs = solve(report.gram, report.rhs);
  if (!coeffs) throw SingularGram("moment Gram matrix is singular");
  report.affine.constant = (*coeffs)[0];
  report.affine.gradient.assign(coeffs->begin() + 1, coeffs->end());

  report.residuals = report.gram * *coeffs;
  for (std::size_t i = 0; i <= n; ++i) report.residuals[i] -= report.rhs[i];
  if (std::any_of(report.residuals.begin(), report.residuals.end(), [](const Rational& r) { return r != 0; })) {
    throw InvariantError("extremal affine solve left a nonzero residual");
  }
  return report;
}

Rational relative_futaki(const DelzantPolytope& p, std::span<const std::size_t> excluded, const Polynomial& q) {
  if (q.vars() != p.dim()) throw DimensionMismatch("polynomial and polytope dimensions differ");
  if (q.degree() > 2) throw UnsupportedDegree("relative Futaki functional supports test polynomials of degree <= 2");
  const AffineFunction a = extremal_affine(p, excluded).affine;
  // q * A has degree up to 3, beyond MomentData, so integrate it directly.
  const Rational interior = integrate_over_polytope(p, q * Polynomial::from_affine(a));
  return integrate_over_boundary(p, excluded, q) - interior;
}

AffineFunction restrict_affine(const AffineFunction& a, const FacetChart& chart) {
  if (a.dim() != chart.ambient_dim()) throw DimensionMismatch("affine function and chart live in different dimensions");
  AffineFunction out;
  out.constant = a(chart.origin);
  out.gradient.assign(chart.basis.cols(), Rational(0));
  for (std::size_t k = 0; k < chart.basis.cols(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) out.gradient[k] += a.gradient[i] * Rational(chart.basis(i, k));
  return out;
}

}  // namespace cuspcheck
