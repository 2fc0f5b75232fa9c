#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspcheck/linalg.hpp"
#include "cuspcheck/rational.hpp"

namespace cuspcheck {

/// Halfspace <normal, x> >= offset. Normals point into the polytope and must
/// be primitive integer vectors.
struct Facet {
  IntegerVector normal;
  Rational offset;
  std::string label;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// A torus fixed point: a vertex together with every facet through it.
struct Vertex {
  RationalVector point;
  std::vector<std::size_t> active_facets;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Lattice-adapted parametrisation y -> origin + basis * y of a facet's
/// affine span. `frame` is the unimodular matrix [e | basis] with
/// <normal, e> = 1, so that Lebesgue measure in y is the lattice measure on
/// the hyperplane.
struct FacetChart {
  std::size_t facet = 0;
  RationalVector origin;
  IntegerMatrix basis;  // n x (n-1)
  IntegerMatrix frame;  // n x n, unimodular

  std::size_t ambient_dim() const { return basis.rows(); }
  RationalVector map(std::span<const Rational> y) const;
  /// Chart coordinates of a point on the facet hyperplane.
  RationalVector coordinates(std::span<const Rational> x) const;
};

/// Rational simple-or-not polytope in halfspace form. Construction through
/// create() validates primitivity, boundedness, nonempty interior and the
/// absence of redundant facets; the Delzant condition itself is checked
/// separately by is_delzant(). Immutable after construction.
class DelzantPolytope {
 public:
  static DelzantPolytope create(std::size_t dim, std::vector<Facet> facets);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(std::size_t i) const { return facets_.at(i); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Index of the facet labelled `label`, or of the facet whose decimal
  /// index equals `label` when no label matches.
  std::size_t find_facet(std::string_view label) const;

  std::optional<std::size_t> find_vertex(std::span<const Rational> point) const;
  /// Vertex indices lying on facet i.
  std::vector<std::size_t> vertices_on_facet(std::size_t i) const;
  /// <u_i, x> - c_i
  Rational slack(std::size_t i, std::span<const Rational> x) const;

  friend bool operator==(const DelzantPolytope& a, const DelzantPolytope& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  DelzantPolytope(std::size_t dim, std::vector<Facet> facets, std::vector<Vertex> vertices)
      : dim_(dim), facets_(std::move(facets)), vertices_(std::move(vertices)) {}

  std::size_t dim_;
  std::vector<Facet> facets_;
  std::vector<Vertex> vertices_;
};

/// Exhaustive n-subset vertex enumeration over a raw facet list, sorted
/// lexicographically. Throws UnboundedPolytope / EmptyPolytope.
std::vector<Vertex> enumerate_vertices(std::size_t dim, std::span<const Facet> facets);
const std::vector<Vertex>& enumerate_vertices(const DelzantPolytope& p);

struct DelzantReport {
  bool delzant = true;
  std::vector<std::size_t> violating_vertices;
};

/// At every vertex exactly n facets meet and their normals form a lattice basis.
DelzantReport is_delzant(const DelzantPolytope& p);

/// Dimension of the affine hull of the given points (-1 for an empty set).
int affine_dimension(std::span<const RationalVector> points);

FacetChart facet_chart(const DelzantPolytope& p, std::size_t facet);

struct FacetPolytope {
  DelzantPolytope polytope;
  FacetChart chart;
  /// For each facet of `polytope`, the facet of the parent it comes from.
  std::vector<std::size_t> parent_facets;
};

/// The facet as a full-dimensional polytope in chart coordinates. Throws
/// DegenerateFacet if the face has dimension < n-1, InvalidArgument for n = 1.
FacetPolytope facet_polytope(const DelzantPolytope& p, std::size_t facet);

/// Image under x -> T x + v; normals transform by T^{-T}.
DelzantPolytope apply_unimodular(const DelzantPolytope& p, const IntegerMatrix& t, std::span<const Rational> v);

/// Image under x -> c x for rational c > 0.
DelzantPolytope dilate(const DelzantPolytope& p, const Rational& c);

/// Standard simplex {x_i >= 0, sum x_i <= 1}; the last facet is labelled "hyp".
DelzantPolytope standard_simplex(std::size_t n);
/// [0, side]^n with facets labelled x<i>lo / x<i>hi.
DelzantPolytope cube(std::size_t n, const Rational& side = 1);

}  // namespace cuspcheck
