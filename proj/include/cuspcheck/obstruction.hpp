#pragma once

#include <optional>
#include <vector>

#include "cuspcheck/extremal.hpp"
#include "cuspcheck/linalg.hpp"
#include "cuspcheck/polytope.hpp"

namespace cuspcheck {

/// Divisor condition in polytope form: the extremal affine function of the
/// pair (P, F), restricted to F, must differ from the extremal affine
/// function of F itself by a constant.
struct ObstructionReport {
  std::size_t facet = 0;
  AffineFunction pair;        // on P
  AffineFunction restricted;  // pair o chart
  AffineFunction facet_function;  // extremal affine function of F, same chart
  RationalVector difference_gradient;
  bool satisfied = false;
  /// restricted - facet_function, set only when satisfied.
  std::optional<Rational> offset;
  FacetChart chart;
};

ObstructionReport check_facet_condition(const DelzantPolytope& p, std::size_t facet);

/// Finite-dimensional data for the balancing, genericity and kernel
/// hypotheses. Vectors are coordinates in a fixed basis of h.
struct MomentConfiguration {
  std::size_t n = 0;  // complex dimension of the manifold
  std::vector<RationalVector> points;  // moment map values mu(p_i)
  RationalVector weights;              // a_i > 0
  RationalMatrix t_basis;              // dim h x dim t, full column rank
  std::optional<RationalMatrix> eval_matrix;  // rows: evaluation functionals on h

  std::size_t h_dim() const { return t_basis.rows(); }
  /// Throws DimensionMismatch / InvalidArgument if inconsistent.
  void validate() const;
};

struct BalanceReport {
  bool satisfied = false;
  RationalVector weighted_sum;  // sum_i a_i^{n-1} mu(p_i)
  RationalVector residual;      // component orthogonal to t
};

BalanceReport check_balance(const MomentConfiguration& cfg);
bool check_genericity(const MomentConfiguration& cfg);
/// null(eval_matrix) within t. Throws MissingEvaluationData without eval_matrix.
bool check_kernel_condition(const MomentConfiguration& cfg);

/// Toric data: t = h = R^n (maximal torus), the points are the free fixed
/// points of `divisor`, unit weights, and an empty evaluation matrix.
MomentConfiguration toric_configuration(const DelzantPolytope& p, std::size_t divisor);

}  // namespace cuspcheck
