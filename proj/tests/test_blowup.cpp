#include <doctest.h>

#include <random>

#include "cuspcheck/blowup.hpp"
#include "cuspcheck/errors.hpp"
#include "cuspcheck/moments.hpp"
#include "test_support.hpp"

using namespace cuspcheck;

namespace {

RationalVector pt(std::initializer_list<Rational> xs) { return RationalVector(xs); }

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long>(k);
  return f;
}

Rational power(const Rational& x, std::size_t n) {
  Rational r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= x;
  return r;
}

/// Brute-force bound: min over other vertices of <u_new, w - v>.
Rational bound_oracle(const DelzantPolytope& p, const RationalVector& v) {
  const auto k = *p.find_vertex(v);
  RationalVector u(p.dim(), Rational(0));
  for (auto f : p.vertices()[k].active_facets)
    for (std::size_t i = 0; i < p.dim(); ++i) u[i] += Rational(p.facet(f).normal[i]);
  std::optional<Rational> best;
  for (const auto& w : p.vertices()) {
    if (w.point == v) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) s += u[i] * (w.point[i] - v[i]);
    if (!best || s < *best) best = s;
  }
  return *best;
}

}  // namespace

TEST_CASE("chopping the triangle's origin") {
  const auto p = testing::unit_triangle();
  BlowupSpec spec;
  const auto q = blow_up_vertex(p, pt({0, 0}), Rational(1, 4), spec);
  REQUIRE(q.facet_count() == 4);
  CHECK(q.facet(3).normal == IntegerVector{Integer(1), Integer(1)});
  CHECK(q.facet(3).offset == Rational(1, 4));
  CHECK(spec.new_facet == 3);
  CHECK(spec.parameter == Rational(1, 4));
  CHECK(spec.label == "E1");
  CHECK(q.facet(3).label == "E1");
  std::vector<RationalVector> got;
  for (const auto& v : q.vertices()) got.push_back(v.point);
  CHECK(got == std::vector<RationalVector>{pt({0, Rational(1, 4)}), pt({0, 1}), pt({Rational(1, 4), 0}), pt({1, 0})});
  CHECK(is_delzant(q).delzant);
}

TEST_CASE("chopping the 3-simplex origin gives the shell 1/5 <= sum x <= 1") {
  const auto p = standard_simplex(3);
  const auto q = blow_up_vertex(p, pt({0, 0, 0}), Rational(1, 5));
  CHECK(q.facet(4).normal == IntegerVector{Integer(1), Integer(1), Integer(1)});
  CHECK(q.facet(4).offset == Rational(1, 5));
  CHECK(is_delzant(q).delzant);
  CHECK(q.vertices().size() == 6);
  CHECK(polytope_moments(q).volume == Rational(1, 6) - Rational(1, 750));
}

TEST_CASE("max chop parameter") {
  CHECK(max_chop_parameter(testing::unit_triangle(), pt({0, 0})) == 1);
  CHECK(max_chop_parameter(cube(2), pt({0, 0})) == 1);
  const auto p = blow_up_vertex(testing::unit_triangle(), pt({0, 0}), Rational(1, 4));
  CHECK(max_chop_parameter(p, pt({Rational(1, 4), 0})) == Rational(1, 4));
  CHECK(max_chop_parameter(p, pt({Rational(1, 4), 0})) == bound_oracle(p, pt({Rational(1, 4), 0})));
  CHECK(max_chop_parameter(p, pt({1, 0})) == bound_oracle(p, pt({1, 0})));
  CHECK_THROWS_AS(max_chop_parameter(p, pt({Rational(1, 2), 0})), NotAVertex);
}

TEST_CASE("max chop parameter agrees with the brute-force bound on random polytopes") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_delzant(2 + rng() % 2, rng);
    for (const auto& v : p.vertices()) CHECK(max_chop_parameter(p, v.point) == bound_oracle(p, v.point));
  }
}

TEST_CASE("chop validity errors") {
  const auto p = testing::unit_triangle();
  CHECK_THROWS_AS(blow_up_vertex(p, pt({0, 0}), Rational(1)), ChopTooDeep);
  CHECK_THROWS_AS(blow_up_vertex(p, pt({0, 0}), Rational(3, 2)), ChopTooDeep);
  CHECK_THROWS_AS(blow_up_vertex(p, pt({0, 0}), Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(blow_up_vertex(standard_simplex(1), pt({0}), Rational(1, 2)), InvalidArgument);
  CHECK_THROWS_AS(blow_up_vertex(p, pt({Rational(1, 2), Rational(1, 2)}), Rational(1, 8)), NotAVertex);
  const auto pyramid = DelzantPolytope::create(3, {testing::facet({0, 0, 1}, 0), testing::facet({1, 0, -1}, -1),
                                                   testing::facet({-1, 0, -1}, -1), testing::facet({0, 1, -1}, -1),
                                                   testing::facet({0, -1, -1}, -1)});
  CHECK_THROWS_AS(max_chop_parameter(pyramid, pt({0, 0, 1})), NonSmoothVertex);
}

TEST_CASE("chops stay Delzant and remove exactly eps^n / n! of volume") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const auto p = testing::random_delzant(n, rng);
    const auto& v = p.vertices()[rng() % p.vertices().size()].point;
    const Rational eps = max_chop_parameter(p, v) * Rational(1 + static_cast<long>(rng() % 7), 8);
    const auto q = blow_up_vertex(p, v, eps);
    CHECK(is_delzant(q).delzant);
    CHECK(polytope_moments(p).volume - polytope_moments(q).volume == power(eps, n) / factorial(n));
  }
}

TEST_CASE("chopping commutes with unimodular maps") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const auto p = testing::random_delzant(n, rng);
    const auto t = testing::random_unimodular(n, rng);
    RationalVector shift(n);
    for (auto& x : shift) x = testing::random_rational(rng, -2, 2, 3);
    const auto& v = p.vertices()[rng() % p.vertices().size()].point;
    auto tv = to_rational(t) * v;
    for (std::size_t i = 0; i < n; ++i) tv[i] += shift[i];
    const Rational eps = max_chop_parameter(p, v) / 2;
    CHECK(max_chop_parameter(apply_unimodular(p, t, shift), tv) == 2 * eps);
    const auto a = apply_unimodular(blow_up_vertex(p, v, eps), t, shift);
    const auto b = blow_up_vertex(apply_unimodular(p, t, shift), tv, eps);
    CHECK(a == b);
  }
}

TEST_CASE("free fixed points") {
  const auto tri = testing::unit_triangle();
  auto pts = [](const std::vector<Vertex>& vs) {
    std::vector<RationalVector> out;
    for (const auto& v : vs) out.push_back(v.point);
    return out;
  };
  CHECK(pts(free_fixed_points(tri, 2)) == std::vector<RationalVector>{pt({0, 0})});
  const auto p = blow_up_vertex(tri, pt({0, 0}), Rational(1, 4));
  CHECK(pts(free_fixed_points(p, 2)) == std::vector<RationalVector>{pt({0, Rational(1, 4)}), pt({Rational(1, 4), 0})});
  const auto c = cube(3);
  const auto bottom = free_fixed_points(c, c.find_facet("x3hi"));
  CHECK(bottom.size() == 4);
  for (const auto& v : bottom) CHECK(v.point[2] == 0);
}

TEST_CASE("edge directions are the columns of the inverse normal matrix") {
  const auto p = blow_up_vertex(testing::unit_triangle(), pt({0, 0}), Rational(1, 4));
  const auto k = *p.find_vertex(pt({Rational(1, 4), 0}));
  auto dirs = edge_directions(p, k);
  std::sort(dirs.begin(), dirs.end());
  CHECK(dirs == std::vector<RationalVector>{pt({-1, 1}), pt({1, 0})});
}

TEST_CASE("tower: round 0 gives P_1/4, round 1 adds normals (1,2) and (2,1)") {
  auto s = TowerState::start(testing::unit_triangle(), 2);
  CHECK(s.pending == std::vector<RationalVector>{pt({0, 0})});
  s = tower_step(s, Rational(1, 4));
  CHECK(s.round == 1);
  CHECK(s.polytope == blow_up_vertex(testing::unit_triangle(), pt({0, 0}), Rational(1, 4)));
  CHECK(s.pending.size() == 2);
  CHECK(s.divisor_facet == 2);
  CHECK(s.polytope.facet(2) == testing::unit_triangle().facet(2));

  const auto t = tower_step(s, Rational(1, 16));
  CHECK(t.round == 2);
  CHECK(t.history.size() == 3);
  CHECK(t.polytope.facet_count() == 6);
  std::vector<IntegerVector> normals{t.polytope.facet(4).normal, t.polytope.facet(5).normal};
  std::sort(normals.begin(), normals.end());
  CHECK(normals == std::vector<IntegerVector>{{Integer(1), Integer(2)}, {Integer(2), Integer(1)}});
  CHECK(is_delzant(t.polytope).delzant);
  CHECK(t.pending.size() == 4);
  CHECK(t.polytope.facet(2) == testing::unit_triangle().facet(2));
  CHECK(polytope_moments(s.polytope).volume - polytope_moments(t.polytope).volume == 2 * Rational(1, 512));
}

TEST_CASE("tower: too deep or interacting second rounds are rejected") {
  const auto s = tower_step(TowerState::start(testing::unit_triangle(), 2), Rational(1, 4));
  // The two chops meet once 1/2 - eps < 1/4 + eps, i.e. from eps = 1/8 on.
  CHECK_THROWS_AS(tower_step(s, Rational(1, 5)), InteractingChops);
  CHECK_THROWS_AS(tower_step(s, Rational(1, 2)), ChopTooDeep);
  CHECK_NOTHROW(tower_step(s, Rational(1, 10)));
}
