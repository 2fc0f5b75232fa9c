#pragma once

#include <span>

#include "cuspcheck/linalg.hpp"
#include "cuspcheck/moments.hpp"
#include "cuspcheck/polynomial.hpp"
#include "cuspcheck/polytope.hpp"

namespace cuspcheck {

struct ExtremalSolveReport {
  AffineFunction affine;
  RationalMatrix gram;      // moment Gram matrix of {1, x_1..x_n}
  RationalVector rhs;       // boundary moments of {1, x_1..x_n}
  RationalVector residuals; // gram * coefficients - rhs, exactly zero
  std::vector<std::size_t> excluded;
  /// More than one excluded facet: the defining functional is only
  /// formulated for a single cusp divisor.
  bool multi_facet_exclusion = false;
};

/// The unique affine A with
///   int_{dP \ excluded} f dsigma = int_P f A dlambda
/// for every affine f. `excluded` empty gives the classical extremal affine
/// function of a compact toric manifold.
ExtremalSolveReport extremal_affine(const DelzantPolytope& p, std::span<const std::size_t> excluded);

/// L(q) = int_{dP \ excluded} q dsigma - int_P q A dlambda with A the
/// extremal affine function for `excluded`. Zero for affine q. Degree <= 2.
Rational relative_futaki(const DelzantPolytope& p, std::span<const std::size_t> excluded, const Polynomial& q);

/// Pullback A o chart to the facet's (n-1) chart coordinates.
AffineFunction restrict_affine(const AffineFunction& a, const FacetChart& chart);

}  // namespace cuspcheck
