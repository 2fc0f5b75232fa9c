#include "cuspcheck/moments.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

namespace {

Integer factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

Rational simplex_volume(std::span<const RationalVector> v) {
  const std::size_t n = v.size() - 1;
  RationalMatrix edges(n, n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 0; j < n; ++j) edges(k - 1, j) = v[k][j] - v[0][j];
  return abs(determinant(edges)) / Rational(factorial(static_cast<unsigned>(n)));
}

std::vector<RationalVector> simplex_points(const DelzantPolytope& p, const Simplex& s) {
  std::vector<RationalVector> pts;
  pts.reserve(s.size());
  for (auto k : s) pts.push_back(p.vertices()[k].point);
  return pts;
}

void triangulate_face(const DelzantPolytope& p, const std::vector<std::size_t>& face, int dim,
                      std::vector<Simplex>& out) {
  if (dim == 0) {
    out.push_back({face.front()});
    return;
  }
  // Vertex indices follow lexicographic order, so the apex is the smallest index.
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    std::vector<std::size_t> sub;
    for (auto k : face) {
      const auto& a = p.vertices()[k].active_facets;
      if (std::binary_search(a.begin(), a.end(), j)) sub.push_back(k);
    }
    if (sub.empty() || sub.front() == apex) continue;
    std::vector<RationalVector> pts;
    for (auto k : sub) pts.push_back(p.vertices()[k].point);
    if (affine_dimension(pts) != dim - 1 || !seen.insert(sub).second) continue;
    std::vector<Simplex> lower;
    triangulate_face(p, sub, dim - 1, lower);
    for (auto& s : lower) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

void check_degree(const Polynomial& q, int max_degree) {
  if (q.degree() > max_degree) {
    throw UnsupportedDegree("polynomial of degree " + std::to_string(q.degree()) + " exceeds supported degree " +
                            std::to_string(max_degree));
  }
}

template <typename Loop>
MomentData sum_simplex_moments(const DelzantPolytope& p, Loop&& loop) {
  const auto simplices = triangulate(p);
  std::vector<MomentData> parts(simplices.size());
  loop(simplices.size(), [&](std::size_t i) {
    const auto pts = simplex_points(p, simplices[i]);
    parts[i] = simplex_moments(pts);
  });
  MomentData total = MomentData::zero(p.dim());
  for (const auto& m : parts) total += m;
  return total;
}

}  // namespace

MomentData MomentData::zero(std::size_t n) { return {Rational(0), RationalVector(n, Rational(0)), RationalMatrix(n, n)}; }

RationalMatrix MomentData::gram() const {
  const std::size_t n = dim();
  RationalMatrix g(n + 1, n + 1);
  g(0, 0) = volume;
  for (std::size_t i = 0; i < n; ++i) {
    g(0, i + 1) = first_moments[i];
    g(i + 1, 0) = first_moments[i];
    for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 1) = second_moments(i, j);
  }
  return g;
}

MomentData& MomentData::operator+=(const MomentData& other) {
  volume += other.volume;
  for (std::size_t i = 0; i < dim(); ++i) {
    first_moments[i] += other.first_moments[i];
    for (std::size_t j = 0; j < dim(); ++j) second_moments(i, j) += other.second_moments(i, j);
  }
  return *this;
}

Rational BoundaryMomentData::total_measure() const {
  Rational s = 0;
  for (const auto& f : facets) s += f.measure;
  return s;
}

RationalVector BoundaryMomentData::total_first_moments() const {
  if (facets.empty()) return {};
  RationalVector s(facets.front().first_moments.size(), Rational(0));
  for (const auto& f : facets)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += f.first_moments[i];
  return s;
}

RationalMatrix BoundaryMomentData::total_second_moments() const {
  if (facets.empty()) return {};
  const std::size_t n = facets.front().first_moments.size();
  RationalMatrix s(n, n);
  for (const auto& f : facets)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) += f.second_moments(i, j);
  return s;
}

std::vector<Simplex> triangulate(const DelzantPolytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  std::vector<Simplex> out;
  triangulate_face(p, all, static_cast<int>(p.dim()), out);
  return out;
}

MomentData simplex_moments(std::span<const RationalVector> v) {
  if (v.empty() || v.size() != v.front().size() + 1) throw DimensionMismatch("simplex needs n+1 vertices in R^n");
  const std::size_t n = v.front().size();
  MomentData m = MomentData::zero(n);
  m.volume = simplex_volume(v);
  RationalVector sums(n, Rational(0));
  for (const auto& p : v)
    for (std::size_t i = 0; i < n; ++i) sums[i] += p[i];
  const Rational first_scale = m.volume / Rational(n + 1);
  const Rational second_scale = m.volume / Rational((n + 1) * (n + 2));
  for (std::size_t i = 0; i < n; ++i) {
    m.first_moments[i] = first_scale * sums[i];
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = sums[i] * sums[j];
      for (const auto& p : v) acc += p[i] * p[j];
      m.second_moments(i, j) = second_scale * acc;
    }
  }
  return m;
}

Rational integrate_over_simplex(std::span<const RationalVector> v, const Polynomial& q) {
  if (v.empty() || v.size() != v.front().size() + 1) throw DimensionMismatch("simplex needs n+1 vertices in R^n");
  const std::size_t n = v.front().size();
  if (q.vars() != n) throw DimensionMismatch("polynomial and simplex dimensions differ");
  const Rational scale = simplex_volume(v) * Rational(factorial(static_cast<unsigned>(n)));
  Rational total = 0;
  for (const auto& [exps, coeff] : q.terms()) {
    // The monomial as a product of coordinate functions.
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < exps[i]; ++k) coords.push_back(i);
    const std::size_t d = coords.size();
    // Sum over all assignments of factors to vertices.
    std::vector<std::size_t> assign(d, 0);
    Rational acc = 0;
    for (;;) {
      std::vector<unsigned> mult(n + 1, 0);
      Rational term = 1;
      for (std::size_t m = 0; m < d; ++m) {
        ++mult[assign[m]];
        term *= v[assign[m]][coords[m]];
      }
      if (term != 0) {
        Integer weight = 1;
        for (auto a : mult) weight *= factorial(a);
        acc += term * Rational(weight);
      }
      std::size_t m = 0;
      while (m < d && assign[m] == n) assign[m++] = 0;
      if (m == d) break;
      ++assign[m];
    }
    total += coeff * acc / Rational(factorial(static_cast<unsigned>(n + d)));
  }
  return scale * total;
}

MomentData polytope_moments(const DelzantPolytope& p) {
  return sum_simplex_moments(p, [](std::size_t count, auto&& body) {
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
  });
}

namespace serial {

MomentData polytope_moments(const DelzantPolytope& p) {
  return sum_simplex_moments(p, [](std::size_t count, auto&& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  });
}

}  // namespace serial

Rational integrate_over_polytope(const DelzantPolytope& p, const Polynomial& q) {
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += integrate_over_simplex(simplex_points(p, s), q);
  return total;
}

Rational integrate_polynomial(const MomentData& m, const Polynomial& q) {
  if (q.vars() != m.dim()) throw DimensionMismatch("polynomial and polytope dimensions differ");
  check_degree(q, 2);
  Rational total = 0;
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) coords.push_back(i);
    switch (coords.size()) {
      case 0: total += c * m.volume; break;
      case 1: total += c * m.first_moments[coords[0]]; break;
      default: total += c * m.second_moments(coords[0], coords[1]); break;
    }
  }
  return total;
}

Rational integrate_polynomial(const DelzantPolytope& p, const Polynomial& q) {
  check_degree(q, 2);
  return integrate_polynomial(polytope_moments(p), q);
}

BoundaryMomentData boundary_moments(const DelzantPolytope& p, std::span<const std::size_t> excluded) {
  for (auto e : excluded) {
    if (e >= p.facet_count()) throw UnknownFacet("excluded facet index " + std::to_string(e) + " out of range");
  }
  const std::size_t n = p.dim();
  BoundaryMomentData out;
  out.excluded.assign(excluded.begin(), excluded.end());
  std::sort(out.excluded.begin(), out.excluded.end());
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    if (std::binary_search(out.excluded.begin(), out.excluded.end(), j)) continue;
    FacetMoments fm;
    fm.facet = j;
    fm.second_moments = RationalMatrix(n, n);
    if (n == 1) {
      // A facet of an interval is a point carrying unit mass.
      const auto on = p.vertices_on_facet(j);
      const Rational x = p.vertices()[on.front()].point[0];
      fm.measure = 1;
      fm.first_moments = {x};
      fm.second_moments(0, 0) = x * x;
    } else {
      const auto fp = facet_polytope(p, j);
      const MomentData local = polytope_moments(fp.polytope);
      const RationalMatrix basis = to_rational(fp.chart.basis);
      const RationalVector& o = fp.chart.origin;
      const RationalVector b_first = basis * local.first_moments;
      const RationalMatrix b_second = basis * local.second_moments * basis.transpose();
      fm.measure = local.volume;
      fm.first_moments.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        fm.first_moments[i] = o[i] * local.volume + b_first[i];
        for (std::size_t k = 0; k < n; ++k) {
          fm.second_moments(i, k) = o[i] * o[k] * local.volume + o[i] * b_first[k] + b_first[i] * o[k] + b_second(i, k);
        }
      }
    }
    out.facets.push_back(std::move(fm));
  }
  return out;
}

Rational integrate_over_boundary(const DelzantPolytope& p, std::span<const std::size_t> excluded, const Polynomial& q) {
  if (q.vars() != p.dim()) throw DimensionMismatch("polynomial and polytope dimensions differ");
  std::vector<std::size_t> ex(excluded.begin(), excluded.end());
  std::sort(ex.begin(), ex.end());
  Rational total = 0;
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    if (std::binary_search(ex.begin(), ex.end(), j)) continue;
    if (p.dim() == 1) {
      total += q(p.vertices()[p.vertices_on_facet(j).front()].point);
      continue;
    }
    const auto fp = facet_polytope(p, j);
    total += integrate_over_polytope(fp.polytope, q.compose_affine(fp.chart.origin, to_rational(fp.chart.basis)));
  }
  return total;
}

}  // namespace cuspcheck
