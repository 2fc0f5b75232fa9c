#pragma once

#include "cuspcheck/linalg.hpp"

namespace cuspcheck {

/// Column-style Hermite normal form: H = A U with U unimodular and H lower
/// triangular in echelon form, positive pivots, entries left of each pivot
/// reduced into [0, pivot).
struct HermiteForm {
  IntegerMatrix hermite;
  IntegerMatrix transform;
};

HermiteForm hermite_normal_form(const IntegerMatrix& a);

/// Unimodular V with u^T V = e_1 for a primitive u. Columns 2..n of V are a
/// basis of the sublattice orthogonal to u, and column 1 pairs to 1 with u.
/// Throws NotPrimitive if gcd(u) != 1.
IntegerMatrix unimodular_completion(const IntegerVector& u);

bool is_unimodular(const IntegerMatrix& m);

}  // namespace cuspcheck
