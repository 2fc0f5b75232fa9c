#include "cuspcheck/blowup.hpp"

#include <algorithm>
#include <set>

#include "cuspcheck/errors.hpp"
#include "cuspcheck/lattice.hpp"

namespace cuspcheck {

namespace {

std::string describe(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::size_t smooth_vertex_index(const DelzantPolytope& p, std::span<const Rational> vertex) {
  if (vertex.size() != p.dim()) throw DimensionMismatch("vertex has wrong dimension");
  const auto k = p.find_vertex(vertex);
  if (!k) throw NotAVertex(describe(vertex) + " is not a vertex of the polytope");
  const auto& active = p.vertices()[*k].active_facets;
  bool smooth = active.size() == p.dim();
  if (smooth) {
    IntegerMatrix m(p.dim(), p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r)
      for (std::size_t j = 0; j < p.dim(); ++j) m(r, j) = p.facet(active[r]).normal[j];
    smooth = is_unimodular(m);
  }
  if (!smooth) throw NonSmoothVertex("vertex " + describe(vertex) + " is not a smooth (Delzant) vertex");
  return *k;
}

IntegerVector chop_normal(const DelzantPolytope& p, std::size_t k) {
  IntegerVector u(p.dim(), Integer(0));
  for (auto f : p.vertices()[k].active_facets)
    for (std::size_t i = 0; i < p.dim(); ++i) u[i] += p.facet(f).normal[i];
  return u;
}

std::string fresh_label(const DelzantPolytope& p) {
  std::set<std::string> used;
  for (const auto& f : p.facets()) used.insert(f.label);
  for (std::size_t i = 1;; ++i) {
    std::string l = "E" + std::to_string(i);
    if (!used.count(l)) return l;
  }
}

}  // namespace

Rational max_chop_parameter(const DelzantPolytope& p, std::span<const Rational> vertex) {
  const std::size_t k = smooth_vertex_index(p, vertex);
  const IntegerVector u = chop_normal(p, k);
  const Rational base = dot(u, vertex);
  std::optional<Rational> best;
  for (std::size_t w = 0; w < p.vertices().size(); ++w) {
    if (w == k) continue;
    const Rational gap = dot(u, p.vertices()[w].point) - base;
    if (!best || gap < *best) best = gap;
  }
  if (!best) throw InvariantError("polytope with a single vertex");
  return *best;
}

DelzantPolytope blow_up_vertex(const DelzantPolytope& p, std::span<const Rational> vertex, const Rational& depth,
                               BlowupSpec& applied) {
  // A point on a curve blows up to itself: the "chop" would only move an endpoint.
  if (p.dim() < 2) throw InvalidArgument("corner chops need dimension >= 2");
  const std::size_t k = smooth_vertex_index(p, vertex);
  if (depth <= 0) throw InvalidArgument("chop depth must be positive");
  const Rational bound = max_chop_parameter(p, vertex);
  if (depth >= bound) {
    throw ChopTooDeep("chop depth " + to_string(depth) + " at " + describe(vertex) + " is not below the bound " +
                      to_string(bound));
  }
  IntegerVector u = chop_normal(p, k);
  Rational offset = dot(u, vertex) + depth;
  std::vector<Facet> facets = p.facets();
  applied.vertex.assign(vertex.begin(), vertex.end());
  applied.parameter = depth;
  applied.new_facet = facets.size();
  applied.label = fresh_label(p);
  facets.push_back(Facet{std::move(u), std::move(offset), applied.label});
  return DelzantPolytope::create(p.dim(), std::move(facets));
}

DelzantPolytope blow_up_vertex(const DelzantPolytope& p, std::span<const Rational> vertex, const Rational& depth) {
  BlowupSpec ignored;
  return blow_up_vertex(p, vertex, depth, ignored);
}

std::vector<Vertex> free_fixed_points(const DelzantPolytope& p, std::size_t divisor) {
  if (divisor >= p.facet_count()) throw UnknownFacet("divisor facet index out of range");
  std::vector<Vertex> out;
  for (const auto& v : p.vertices())
    if (p.slack(divisor, v.point) > 0) out.push_back(v);
  return out;
}

std::vector<RationalVector> edge_directions(const DelzantPolytope& p, std::size_t vertex_index) {
  const auto& v = p.vertices().at(vertex_index);
  const std::size_t n = p.dim();
  smooth_vertex_index(p, v.point);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) m(r, j) = Rational(p.facet(v.active_facets[r]).normal[j]);
  const auto inv = inverse(m);
  if (!inv) throw InvariantError("smooth vertex with singular normal matrix");
  std::vector<RationalVector> dirs;
  for (std::size_t c = 0; c < n; ++c) dirs.push_back(inv->col(c));
  return dirs;
}

TowerState TowerState::start(DelzantPolytope p, std::size_t divisor_facet) {
  std::vector<RationalVector> pending;
  for (const auto& v : free_fixed_points(p, divisor_facet)) pending.push_back(v.point);
  return TowerState{std::move(p), divisor_facet, 0, {}, std::move(pending)};
}

TowerState tower_step(const TowerState& s, const Rational& depth) {
  const DelzantPolytope& p = s.polytope;
  if (s.pending.empty()) throw InvalidArgument("tower round has no fixed points to blow up");
  if (depth <= 0) throw InvalidArgument("chop depth must be positive");

  struct Chop {
    std::size_t index;
    IntegerVector normal;
    Rational offset;
    std::vector<RationalVector> new_vertices;
  };
  std::vector<Chop> chops;
  for (const auto& v : s.pending) {
    const std::size_t k = smooth_vertex_index(p, v);
    const Rational bound = max_chop_parameter(p, v);
    if (depth >= bound) {
      throw ChopTooDeep("round " + std::to_string(s.round + 1) + ": depth " + to_string(depth) + " at " +
                        describe(v) + " is not below the bound " + to_string(bound));
    }
    Chop c{k, chop_normal(p, k), Rational(0), {}};
    c.offset = dot(c.normal, v) + depth;
    for (const auto& e : edge_directions(p, k)) {
      RationalVector x = v;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += depth * e[i];
      c.new_vertices.push_back(std::move(x));
    }
    chops.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < chops.size(); ++a)
    for (std::size_t b = 0; b < chops.size(); ++b) {
      if (a == b) continue;
      for (const auto& x : chops[b].new_vertices) {
        if (dot(chops[a].normal, x) <= chops[a].offset) {
          throw InteractingChops("round " + std::to_string(s.round + 1) + ": chops at " + describe(s.pending[a]) +
                                 " and " + describe(s.pending[b]) + " interact at depth " + to_string(depth));
        }
      }
    }

  TowerState next{p, s.divisor_facet, s.round + 1, s.history, {}};
  std::vector<std::size_t> new_facets;
  for (const auto& v : s.pending) {
    BlowupSpec spec;
    next.polytope = blow_up_vertex(next.polytope, v, depth, spec);
    new_facets.push_back(spec.new_facet);
    next.history.push_back(std::move(spec));
  }
  for (const auto& v : next.polytope.vertices()) {
    if (next.polytope.slack(next.divisor_facet, v.point) == 0) continue;
    const bool on_new = std::any_of(new_facets.begin(), new_facets.end(), [&](std::size_t f) {
      return std::binary_search(v.active_facets.begin(), v.active_facets.end(), f);
    });
    if (on_new) next.pending.push_back(v.point);
  }
  return next;
}

}  // namespace cuspcheck
