#include "cuspcheck/obstruction.hpp"

#include <algorithm>

#include "cuspcheck/blowup.hpp"
#include "cuspcheck/errors.hpp"

namespace cuspcheck {

ObstructionReport check_facet_condition(const DelzantPolytope& p, std::size_t facet) {
  if (facet >= p.facet_count()) throw UnknownFacet("facet index out of range");
  const std::size_t excluded[] = {facet};
  ObstructionReport r;
  r.facet = facet;
  r.pair = extremal_affine(p, excluded).affine;
  const FacetPolytope fp = facet_polytope(p, facet);
  r.chart = fp.chart;
  r.restricted = restrict_affine(r.pair, fp.chart);
  r.facet_function = extremal_affine(fp.polytope, {}).affine;
  r.difference_gradient.resize(r.restricted.dim());
  for (std::size_t k = 0; k < r.restricted.dim(); ++k) {
    r.difference_gradient[k] = r.restricted.gradient[k] - r.facet_function.gradient[k];
  }
  r.satisfied = std::all_of(r.difference_gradient.begin(), r.difference_gradient.end(),
                            [](const Rational& x) { return x == 0; });
  if (r.satisfied) r.offset = r.restricted.constant - r.facet_function.constant;
  return r;
}

void MomentConfiguration::validate() const {
  const std::size_t h = h_dim();
  if (h == 0) throw DimensionMismatch("h must have positive dimension");
  if (weights.size() != points.size()) throw DimensionMismatch("one weight per point is required");
  for (const auto& p : points)
    if (p.size() != h) throw DimensionMismatch("moment point has wrong dimension");
  for (const auto& a : weights)
    if (a <= 0) throw InvalidArgument("weights must be positive");
  if (rank(t_basis) != t_basis.cols()) throw InvalidArgument("t_basis must have full column rank");
  if (eval_matrix && eval_matrix->cols() != h) throw DimensionMismatch("eval_matrix must have dim h columns");
}

BalanceReport check_balance(const MomentConfiguration& cfg) {
  cfg.validate();
  BalanceReport r;
  r.weighted_sum.assign(cfg.h_dim(), Rational(0));
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    Rational w = 1;
    for (std::size_t k = 1; k < cfg.n; ++k) w *= cfg.weights[i];
    for (std::size_t j = 0; j < cfg.h_dim(); ++j) r.weighted_sum[j] += w * cfg.points[i][j];
  }
  r.residual = orthogonal_residual(cfg.t_basis, r.weighted_sum);
  r.satisfied = std::all_of(r.residual.begin(), r.residual.end(), [](const Rational& x) { return x == 0; });
  return r;
}

bool check_genericity(const MomentConfiguration& cfg) {
  cfg.validate();
  RationalMatrix span(cfg.h_dim(), cfg.t_basis.cols() + cfg.points.size());
  for (std::size_t i = 0; i < cfg.h_dim(); ++i) {
    for (std::size_t j = 0; j < cfg.t_basis.cols(); ++j) span(i, j) = cfg.t_basis(i, j);
    for (std::size_t k = 0; k < cfg.points.size(); ++k) span(i, cfg.t_basis.cols() + k) = cfg.points[k][i];
  }
  return rank(span) == cfg.h_dim();
}

bool check_kernel_condition(const MomentConfiguration& cfg) {
  cfg.validate();
  if (!cfg.eval_matrix) throw MissingEvaluationData("kernel condition needs an evaluation matrix");
  RationalMatrix eval = *cfg.eval_matrix;
  if (eval.rows() == 0) eval = RationalMatrix(1, cfg.h_dim());
  for (const auto& v : null_space(eval)) {
    if (!in_column_space(cfg.t_basis, v)) return false;
  }
  return true;
}

MomentConfiguration toric_configuration(const DelzantPolytope& p, std::size_t divisor) {
  MomentConfiguration cfg;
  cfg.n = p.dim();
  for (const auto& v : free_fixed_points(p, divisor)) cfg.points.push_back(v.point);
  cfg.weights.assign(cfg.points.size(), Rational(1));
  cfg.t_basis = RationalMatrix::identity(p.dim());
  cfg.eval_matrix = RationalMatrix(0, p.dim());
  return cfg;
}

}  // namespace cuspcheck
