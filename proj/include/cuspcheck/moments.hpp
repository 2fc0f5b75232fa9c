#pragma once

#include <span>
#include <vector>

#include "cuspcheck/linalg.hpp"
#include "cuspcheck/polynomial.hpp"
#include "cuspcheck/polytope.hpp"

namespace cuspcheck {

/// Lebesgue moments of degree <= 2.
struct MomentData {
  Rational volume;
  RationalVector first_moments;   // int x_i
  RationalMatrix second_moments;  // int x_i x_j

  static MomentData zero(std::size_t n);
  std::size_t dim() const { return first_moments.size(); }
  /// [[volume, first^T], [first, second]]: the Gram matrix of {1, x_1..x_n}.
  RationalMatrix gram() const;
  MomentData& operator+=(const MomentData& other);

  friend bool operator==(const MomentData&, const MomentData&) = default;
};

/// Moments of one facet against the lattice measure dsigma, defined by
/// dlambda = dsigma ^ d<u, .> for the primitive normal u.
struct FacetMoments {
  std::size_t facet = 0;
  Rational measure;
  RationalVector first_moments;
  RationalMatrix second_moments;
};

struct BoundaryMomentData {
  std::vector<FacetMoments> facets;  // non-excluded facets, in facet order
  std::vector<std::size_t> excluded;

  Rational total_measure() const;
  RationalVector total_first_moments() const;
  RationalMatrix total_second_moments() const;
};

using Simplex = std::vector<std::size_t>;

/// Fan triangulation: every face not containing the lexicographically
/// smallest vertex is triangulated recursively and coned from that vertex.
std::vector<Simplex> triangulate(const DelzantPolytope& p);

/// Closed-form moments of the simplex with the given n+1 vertices.
MomentData simplex_moments(std::span<const RationalVector> vertices);

/// Exact integral of any polynomial over a simplex, expanding in barycentric
/// coordinates: int lambda^a = n! vol a! / (n + |a|)!.
Rational integrate_over_simplex(std::span<const RationalVector> vertices, const Polynomial& q);

/// OpenMP-parallel over the simplices of the triangulation.
MomentData polytope_moments(const DelzantPolytope& p);

/// Integral of an arbitrary-degree polynomial over P via the triangulation.
Rational integrate_over_polytope(const DelzantPolytope& p, const Polynomial& q);

/// Integral of q over P from MomentData; throws UnsupportedDegree above 2.
Rational integrate_polynomial(const DelzantPolytope& p, const Polynomial& q);
Rational integrate_polynomial(const MomentData& m, const Polynomial& q);

BoundaryMomentData boundary_moments(const DelzantPolytope& p, std::span<const std::size_t> excluded);

/// Integral of q over the non-excluded facets against dsigma.
Rational integrate_over_boundary(const DelzantPolytope& p, std::span<const std::size_t> excluded, const Polynomial& q);

namespace serial {

/// Reference single-threaded version of cuspcheck::polytope_moments.
MomentData polytope_moments(const DelzantPolytope& p);

}  // namespace serial

}  // namespace cuspcheck
