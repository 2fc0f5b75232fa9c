#pragma once

#include <span>
#include <string>
#include <vector>

#include "cuspcheck/polytope.hpp"

namespace cuspcheck {

/// One corner chop. `parameter` is the polytope-level chop depth: the new
/// facet sits at lattice distance `parameter` from the vertex.
struct BlowupSpec {
  RationalVector vertex;
  Rational parameter;
  std::size_t new_facet = 0;  // index in the polytope right after the chop
  std::string label;
};

/// Supremum of valid chop depths at a vertex: the smallest value of
/// <u_new, w> - <u_new, v> over the other vertices w, where u_new is the sum
/// of the active normals at v. Throws NotAVertex / NonSmoothVertex.
Rational max_chop_parameter(const DelzantPolytope& p, std::span<const Rational> vertex);

/// Appends the facet <u_new, x> >= <u_new, v> + depth. Requires
/// 0 < depth < max_chop_parameter(p, v) and dimension >= 2.
DelzantPolytope blow_up_vertex(const DelzantPolytope& p, std::span<const Rational> vertex, const Rational& depth);

/// Like blow_up_vertex, also reporting the applied spec.
DelzantPolytope blow_up_vertex(const DelzantPolytope& p, std::span<const Rational> vertex, const Rational& depth,
                               BlowupSpec& applied);

/// Vertices strictly off facet `divisor`, in vertex order.
std::vector<Vertex> free_fixed_points(const DelzantPolytope& p, std::size_t divisor);

/// Edge-direction lattice vectors at a smooth vertex: the columns of the
/// inverse of the active-normal matrix.
std::vector<RationalVector> edge_directions(const DelzantPolytope& p, std::size_t vertex_index);

/// State of the iterated construction that, in every round, chops all the
/// fixed points created by the previous round with one common depth.
struct TowerState {
  DelzantPolytope polytope;
  std::size_t divisor_facet = 0;
  int round = 0;
  std::vector<BlowupSpec> history;
  /// Vertices to chop in the next round.
  std::vector<RationalVector> pending;

  /// Round 0: the pending set is every free fixed point of p.
  static TowerState start(DelzantPolytope p, std::size_t divisor_facet);
};

/// Chops every pending vertex with the same depth. Throws ChopTooDeep when
/// depth is out of range at some vertex and InteractingChops when two chops
/// would reach each other's new vertices.
TowerState tower_step(const TowerState& s, const Rational& depth);

}  // namespace cuspcheck
