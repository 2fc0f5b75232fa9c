#include "cuspcheck/polytope.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "cuspcheck/errors.hpp"
#include "cuspcheck/lattice.hpp"

namespace cuspcheck {

namespace {

// Calls f(indices) for every k-subset of {0..m-1}, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RationalMatrix normal_rows(std::span<const Facet> facets, std::span<const std::size_t> which, std::size_t dim) {
  RationalMatrix m(which.size(), dim);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t j = 0; j < dim; ++j) m(r, j) = Rational(facets[which[r]].normal[j]);
  return m;
}

Rational slack_of(const Facet& f, std::span<const Rational> x) { return dot(f.normal, x) - f.offset; }

void check_facet_shapes(std::size_t dim, std::span<const Facet> facets) {
  if (dim == 0) throw DimensionMismatch("polytope dimension must be positive");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].normal.size() != dim) {
      throw DimensionMismatch("facet " + std::to_string(i) + ": normal has " + std::to_string(facets[i].normal.size()) +
                              " entries, expected " + std::to_string(dim));
    }
    if (!is_primitive(facets[i].normal)) {
      throw NotPrimitive("facet " + std::to_string(i) + ": normal not primitive");
    }
  }
}

// Nonzero recession direction: d with <u_i, d> >= 0 for all i.
bool has_recession_direction(std::size_t dim, std::span<const Facet> facets) {
  std::vector<std::size_t> all(facets.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (rank(normal_rows(facets, all, dim)) < dim) return true;
  bool found = false;
  // Extreme rays of the cone {U d >= 0} are cut out by n-1 tight constraints.
  for_each_subset(facets.size(), dim - 1, [&](std::span<const std::size_t> sub) {
    if (found) return;
    const auto kernel = null_space(normal_rows(facets, sub, dim));
    if (kernel.size() != 1) return;
    for (int sign : {1, -1}) {
      RationalVector d = kernel.front();
      if (sign < 0)
        for (auto& x : d) x = -x;
      bool ok = true;
      for (const auto& f : facets) {
        if (dot(f.normal, d) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = true;
        return;
      }
    }
  });
  return found;
}

std::vector<RationalVector> points_of(const std::vector<Vertex>& vs, std::span<const std::size_t> which) {
  std::vector<RationalVector> out;
  out.reserve(which.size());
  for (auto i : which) out.push_back(vs[i].point);
  return out;
}

}  // namespace

RationalVector FacetChart::map(std::span<const Rational> y) const {
  if (y.size() != basis.cols()) throw DimensionMismatch("chart map: wrong number of coordinates");
  RationalVector x = origin;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k) x[i] += Rational(basis(i, k)) * y[k];
  return x;
}

RationalVector FacetChart::coordinates(std::span<const Rational> x) const {
  if (x.size() != origin.size()) throw DimensionMismatch("chart coordinates: wrong ambient dimension");
  const auto inv = integer_inverse(frame);
  if (!inv) throw InvariantError("facet chart frame is not unimodular");
  RationalVector shifted(x.begin(), x.end());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= origin[i];
  const RationalVector full = to_rational(*inv) * shifted;
  return RationalVector(full.begin() + 1, full.end());
}

std::vector<Vertex> enumerate_vertices(std::size_t dim, std::span<const Facet> facets) {
  check_facet_shapes(dim, facets);
  {
    std::vector<std::size_t> all(facets.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (rank(normal_rows(facets, all, dim)) < dim) {
      throw UnboundedPolytope("facet normals do not span the ambient space");
    }
  }
  std::map<RationalVector, std::vector<std::size_t>, decltype(&lex_less)> found(&lex_less);
  for_each_subset(facets.size(), dim, [&](std::span<const std::size_t> sub) {
    const RationalMatrix m = normal_rows(facets, sub, dim);
    RationalVector rhs(dim);
    for (std::size_t r = 0; r < dim; ++r) rhs[r] = facets[sub[r]].offset;
    const auto x = solve(m, rhs);
    if (!x) return;
    if (found.count(*x)) return;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const Rational s = slack_of(facets[i], *x);
      if (s < 0) return;
      if (s == 0) active.push_back(i);
    }
    found.emplace(*x, std::move(active));
  });
  if (found.empty()) throw EmptyPolytope("no feasible vertex: the halfspaces have empty intersection");
  if (has_recession_direction(dim, facets)) throw UnboundedPolytope("polytope is unbounded");
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [point, active] : found) out.push_back(Vertex{point, active});
  return out;
}

const std::vector<Vertex>& enumerate_vertices(const DelzantPolytope& p) { return p.vertices(); }

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return -1;
  const std::size_t n = points.front().size();
  RationalMatrix diffs(points.size() - 1, n);
  for (std::size_t k = 1; k < points.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) diffs(k - 1, j) = points[k][j] - points[0][j];
  return static_cast<int>(rank(diffs));
}

DelzantPolytope DelzantPolytope::create(std::size_t dim, std::vector<Facet> facets) {
  auto vertices = enumerate_vertices(dim, facets);
  std::vector<RationalVector> pts;
  for (const auto& v : vertices) pts.push_back(v.point);
  if (affine_dimension(pts) != static_cast<int>(dim)) {
    throw DegeneratePolytope("polytope has empty interior");
  }
  std::set<std::vector<std::size_t>> facet_vertex_sets;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::vector<std::size_t> on;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (std::binary_search(vertices[k].active_facets.begin(), vertices[k].active_facets.end(), i)) on.push_back(k);
    }
    if (affine_dimension(points_of(vertices, on)) != static_cast<int>(dim) - 1) {
      throw RedundantFacet("facet " + std::to_string(i) + " does not support an (n-1)-dimensional face");
    }
    if (!facet_vertex_sets.insert(on).second) {
      throw RedundantFacet("facet " + std::to_string(i) + " duplicates another facet");
    }
  }
  return DelzantPolytope(dim, std::move(facets), std::move(vertices));
}

std::size_t DelzantPolytope::find_facet(std::string_view label) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i].label == label) return i;
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), index);
  if (ec == std::errc() && ptr == label.data() + label.size() && index < facets_.size()) return index;
  throw UnknownFacet("no facet labelled \"" + std::string(label) + "\"");
}

std::optional<std::size_t> DelzantPolytope::find_vertex(std::span<const Rational> point) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (std::equal(point.begin(), point.end(), vertices_[k].point.begin(), vertices_[k].point.end())) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> DelzantPolytope::vertices_on_facet(std::size_t i) const {
  std::vector<std::size_t> on;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& a = vertices_[k].active_facets;
    if (std::binary_search(a.begin(), a.end(), i)) on.push_back(k);
  }
  return on;
}

Rational DelzantPolytope::slack(std::size_t i, std::span<const Rational> x) const { return slack_of(facet(i), x); }

DelzantReport is_delzant(const DelzantPolytope& p) {
  DelzantReport report;
  const std::size_t n = p.dim();
  for (std::size_t k = 0; k < p.vertices().size(); ++k) {
    const auto& active = p.vertices()[k].active_facets;
    bool ok = active.size() == n;
    if (ok) {
      IntegerMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) m(r, j) = p.facet(active[r]).normal[j];
      ok = is_unimodular(m);
    }
    if (!ok) report.violating_vertices.push_back(k);
  }
  report.delzant = report.violating_vertices.empty();
  return report;
}

FacetChart facet_chart(const DelzantPolytope& p, std::size_t facet) {
  const Facet& f = p.facet(facet);
  const std::size_t n = p.dim();
  FacetChart chart;
  chart.facet = facet;
  chart.frame = unimodular_completion(f.normal);
  chart.basis = IntegerMatrix(n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 1; k < n; ++k) chart.basis(i, k - 1) = chart.frame(i, k);
  chart.origin.resize(n);
  for (std::size_t i = 0; i < n; ++i) chart.origin[i] = f.offset * Rational(chart.frame(i, 0));
  return chart;
}

FacetPolytope facet_polytope(const DelzantPolytope& p, std::size_t facet) {
  const std::size_t n = p.dim();
  if (n < 2) throw InvalidArgument("facet polytope needs ambient dimension >= 2");
  const auto on_f = p.vertices_on_facet(facet);
  std::vector<RationalVector> f_points;
  for (auto k : on_f) f_points.push_back(p.vertices()[k].point);
  if (affine_dimension(f_points) != static_cast<int>(n) - 1) {
    throw DegenerateFacet("facet " + std::to_string(facet) + " has dimension below n-1");
  }
  FacetChart chart = facet_chart(p, facet);

  std::vector<Facet> facets;
  std::vector<std::size_t> parents;
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    if (j == facet) continue;
    std::vector<RationalVector> ridge;
    for (auto k : on_f) {
      const auto& a = p.vertices()[k].active_facets;
      if (std::binary_search(a.begin(), a.end(), j)) ridge.push_back(p.vertices()[k].point);
    }
    if (affine_dimension(ridge) != static_cast<int>(n) - 2) continue;
    const Facet& g = p.facet(j);
    IntegerVector w(n - 1);
    for (std::size_t k = 0; k < n - 1; ++k)
      for (std::size_t i = 0; i < n; ++i) w[k] += g.normal[i] * chart.basis(i, k);
    const Integer common = gcd_of(w);
    if (common == 0) throw InvariantError("adjacent facet normal restricts to zero");
    for (auto& x : w) x /= common;
    Rational offset = (g.offset - dot(g.normal, chart.origin)) / Rational(common);
    facets.push_back(Facet{std::move(w), std::move(offset), g.label});
    parents.push_back(j);
  }
  auto poly = DelzantPolytope::create(n - 1, std::move(facets));
  return FacetPolytope{std::move(poly), std::move(chart), std::move(parents)};
}

DelzantPolytope apply_unimodular(const DelzantPolytope& p, const IntegerMatrix& t, std::span<const Rational> v) {
  const std::size_t n = p.dim();
  if (t.rows() != n || t.cols() != n || v.size() != n) throw DimensionMismatch("apply_unimodular: size mismatch");
  if (!is_unimodular(t)) throw NotUnimodular("transformation matrix must have determinant +-1");
  const auto inv = integer_inverse(t);
  if (!inv) throw InvariantError("unimodular matrix without integer inverse");
  const IntegerMatrix inv_t = inv->transpose();
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    IntegerVector u(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i] += inv_t(i, j) * f.normal[j];
    Rational c = f.offset + dot(u, v);
    facets.push_back(Facet{std::move(u), std::move(c), f.label});
  }
  return DelzantPolytope::create(n, std::move(facets));
}

DelzantPolytope dilate(const DelzantPolytope& p, const Rational& c) {
  if (c <= 0) throw InvalidArgument("dilation factor must be positive");
  std::vector<Facet> facets = p.facets();
  for (auto& f : facets) f.offset *= c;
  return DelzantPolytope::create(p.dim(), std::move(facets));
}

DelzantPolytope standard_simplex(std::size_t n) {
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector u(n, Integer(0));
    u[i] = 1;
    facets.push_back(Facet{std::move(u), Rational(0), "x" + std::to_string(i + 1)});
  }
  facets.push_back(Facet{IntegerVector(n, Integer(-1)), Rational(-1), "hyp"});
  return DelzantPolytope::create(n, std::move(facets));
}

DelzantPolytope cube(std::size_t n, const Rational& side) {
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector lo(n, Integer(0)), hi(n, Integer(0));
    lo[i] = 1;
    hi[i] = -1;
    facets.push_back(Facet{std::move(lo), Rational(0), "x" + std::to_string(i + 1) + "lo"});
    facets.push_back(Facet{std::move(hi), -side, "x" + std::to_string(i + 1) + "hi"});
  }
  return DelzantPolytope::create(n, std::move(facets));
}

}  // namespace cuspcheck
