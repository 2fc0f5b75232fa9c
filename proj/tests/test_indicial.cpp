#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "cuspcheck/errors.hpp"
#include "cuspcheck/indicial.hpp"

using namespace cuspcheck;
using cd = std::complex<double>;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

/// Durand-Kerner iteration on the expanded quartic in delta, in long double.
/// Shares nothing with the nested-quadratic path under test.
std::vector<std::complex<long double>> quartic_roots_oracle(const SpectralPair& p, const IndicialCoefficients& c = {}) {
  using cl = std::complex<long double>;
  const long double a = c.quartic, b = c.cross * p.lambda + c.linear;
  // monic coefficients of d^4 + k3 d^3 + k2 d^2 + k1 d + k0
  const long double k3 = -2.0L, k2 = (a - b) / a, k1 = b / a, k0 = static_cast<long double>(p.mu) / a;
  auto f = [&](cl z) { return (((z + k3) * z + k2) * z + k1) * z + k0; };
  std::vector<cl> z{cl(0.4L, 0.9L), cl(0.4L, 0.9L) * cl(0.4L, 0.9L), std::pow(cl(0.4L, 0.9L), 3), std::pow(cl(0.4L, 0.9L), 4)};
  const long double radius = 1.0L + std::max({std::abs(k3), std::abs(k2), std::abs(k1), std::abs(k0)});
  for (auto& w : z) w *= radius;
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      cl den = 1;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0) den = cl(1e-30L);
      const cl step = f(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-30L) break;
  }
  std::sort(z.begin(), z.end(), [](const cl& x, const cl& y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
  return z;
}

std::vector<SpectralPair> random_admissible(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 50.0);
  std::vector<SpectralPair> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: out[i] = {value(rng), value(rng)}; break;
      case 1: out[i] = {0.0, value(rng)}; break;                 // complex s when mu > 1/8
      case 2: out[i] = {value(rng), 0.0}; break;                 // s = 0 is a root
      default: out[i] = {value(rng) * 1e-3, value(rng) * 1e-3}; break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the zero pair gives 0, 1 and (1 +- sqrt 5)/2") {
  const auto roots = indicial_roots(SpectralPair{0.0, 0.0});
  REQUIRE(roots.size() == 4);
  const double expected[] = {1.0 - kPhi, 0.0, 1.0, kPhi};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(roots[i].delta - cd(expected[i])) < 1e-12);
    CHECK(std::abs(roots[i].s_value - (roots[i].delta * roots[i].delta - roots[i].delta)) < 1e-12);
  }
}

TEST_CASE("pair (1, 1/2): s = (3 +- sqrt 5)/2") {
  const SpectralPair p{1.0, 0.5};
  const auto s = indicial_s_roots(p);
  CHECK(std::abs(s[0] - cd((3.0 - std::sqrt(5.0)) / 2.0)) < 1e-12);
  CHECK(std::abs(s[1] - cd((3.0 + std::sqrt(5.0)) / 2.0)) < 1e-12);
  for (const auto& r : indicial_roots(p)) CHECK(std::abs(indicial_polynomial(p, r.delta)) < 1e-12);
}

TEST_CASE("roots agree with a Durand-Kerner oracle") {
  const auto pairs = random_admissible(400, 5);
  for (const auto& p : pairs) {
    const auto got = indicial_roots(p);
    const auto want = quartic_roots_oracle(p);
    // Conjugate pairs share a real part, so match as multisets.
    std::vector<bool> used(4, false);
    for (const auto& r : got) {
      CAPTURE(p.lambda);
      CAPTURE(p.mu);
      std::size_t best = 0;
      double dist = 1e300;
      for (std::size_t j = 0; j < 4; ++j) {
        const double d = std::abs(r.delta - cd(static_cast<double>(want[j].real()), static_cast<double>(want[j].imag())));
        if (!used[j] && d < dist) {
          dist = d;
          best = j;
        }
      }
      used[best] = true;
      CHECK(dist < 1e-9 * (1.0 + std::abs(r.delta)));
    }
  }
}

TEST_CASE("residuals stay below 1e-12 relative to the coefficient size") {
  for (const auto& p : random_admissible(2000, 9)) {
    const double bound = kResidualTolerance * (1.0 + indicial_coefficient_norm(p));
    for (const auto& r : indicial_roots(p)) CHECK(std::abs(indicial_polynomial(p, r.delta)) < bound);
  }
}

TEST_CASE("root sets are symmetric under delta -> 1 - delta") {
  for (const auto& p : random_admissible(2000, 13)) {
    const auto roots = indicial_roots(p);
    for (const auto& r : roots) {
      const cd mirror = 1.0 - r.delta;
      double best = 1e300;
      for (const auto& q : roots) best = std::min(best, std::abs(q.delta - mirror));
      CHECK(best < 1e-12 * (1.0 + std::abs(r.delta)));
    }
  }
}

TEST_CASE("no admissible pair has a root with real part in (0, 1)") {
  const auto pairs = random_admissible(10000, 17);
  CHECK(roots_in_window(pairs, 0.0, 1.0).empty());
  CHECK(certify_weight(pairs, 0.5).admissible);
}

TEST_CASE("roots_in_window examples") {
  const std::vector<SpectralPair> zero{{0.0, 0.0}};
  CHECK(roots_in_window(zero, 0.0, 1.0).empty());
  const auto w = roots_in_window(zero, -1.0, 0.5);
  REQUIRE(w.size() == 2);
  CHECK(std::abs(w[0].delta - cd(1.0 - kPhi)) < 1e-12);
  CHECK(std::abs(w[1].delta - cd(0.0)) < 1e-12);
  CHECK_THROWS_AS(roots_in_window(std::vector<SpectralPair>{}, 0.0, 1.0), EmptySpectrum);
  CHECK_THROWS_AS(roots_in_window(zero, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("certify_weight examples") {
  const std::vector<SpectralPair> zero{{0.0, 0.0}};
  const auto c = certify_weight(zero, -0.3);
  CHECK(c.admissible);
  // Nearest root is 0; the next one, 1 - phi, sits 0.318 away.
  CHECK(std::abs(c.distance - 0.3) < 1e-12);
  CHECK(std::abs(certify_weight(zero, -0.5).distance - (kPhi - 1.5)) < 1e-12);
  CHECK_FALSE(certify_weight(zero, 0.0).admissible);
  CHECK_FALSE(certify_weight(zero, 1.0 + 1e-10).admissible);
  CHECK(certify_weight(zero, 0.5).admissible);
  CHECK_THROWS_AS(certify_weight(std::vector<SpectralPair>{}, 0.5), EmptySpectrum);
}

TEST_CASE("parallel and serial scans agree exactly") {
  const auto pairs = random_admissible(5000, 19);
  const auto a = roots_in_window(pairs, -3.0, 4.0);
  const auto b = serial::roots_in_window(pairs, -3.0, 4.0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].delta == b[i].delta);
  CHECK(certify_weight(pairs, -0.7).distance == serial::certify_weight(pairs, -0.7).distance);
}

TEST_CASE("explicit coefficients") {
  const IndicialCoefficients c{1.0, 2.0, 1.0};
  CHECK_FALSE(c.is_unit_scale());
  CHECK(IndicialCoefficients{}.is_unit_scale());
  const SpectralPair p{0.5, 0.25};
  const auto want = quartic_roots_oracle(p, c);
  const auto got = indicial_roots(p, c);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(got[i].delta.real() - static_cast<double>(want[i].real())) < 1e-9 * (1.0 + std::abs(got[i].delta)));
    CHECK(std::abs(indicial_polynomial(p, got[i].delta, c)) < 1e-12);
  }
}

TEST_CASE("invalid pairs are rejected") {
  CHECK_THROWS_AS(indicial_roots(SpectralPair{-1.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(indicial_roots(SpectralPair{0.0, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(indicial_roots(SpectralPair{0.0, 0.0, 0}), InvalidArgument);
  CHECK_THROWS_AS(indicial_roots(SpectralPair{0.0, 0.0, 1, 0.0}), InvalidArgument);
}
