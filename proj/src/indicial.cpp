#include "cuspcheck/indicial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "cuspcheck/errors.hpp"

namespace cuspcheck {

namespace {

void validate(const SpectralPair& pair, const IndicialCoefficients& c) {
  if (!(pair.lambda >= 0.0) || !(pair.mu >= 0.0)) throw InvalidArgument("spectral pair needs lambda >= 0 and mu >= 0");
  if (!(pair.scale > 0.0)) throw InvalidArgument("spectral pair scale must be positive");
  if (pair.multiplicity < 1) throw InvalidArgument("multiplicity must be at least 1");
  if (!(c.quartic > 0.0)) throw InvalidArgument("leading indicial coefficient must be positive");
}

bool root_less(const IndicialRoot& a, const IndicialRoot& b) {
  if (a.delta.real() != b.delta.real()) return a.delta.real() < b.delta.real();
  return a.delta.imag() < b.delta.imag();
}

template <typename Loop>
std::vector<IndicialRoot> window_impl(std::span<const SpectralPair> pairs, double lo, double hi,
                                      const IndicialCoefficients& c, Loop&& loop) {
  if (pairs.empty()) throw EmptySpectrum("no spectral pairs given");
  if (!(lo < hi)) throw InvalidArgument("window needs lo < hi");
  std::vector<std::vector<IndicialRoot>> per_pair(pairs.size());
  for (const auto& p : pairs) validate(p, c);
  loop(pairs.size(), [&](std::size_t i) {
    for (auto& r : indicial_roots(pairs[i], c)) {
      if (r.delta.real() > lo && r.delta.real() < hi) per_pair[i].push_back(r);
    }
  });
  std::vector<IndicialRoot> out;
  for (auto& v : per_pair) out.insert(out.end(), v.begin(), v.end());
  std::stable_sort(out.begin(), out.end(), root_less);
  return out;
}

template <typename Loop>
WeightCertificate certify_impl(std::span<const SpectralPair> pairs, double eta, const IndicialCoefficients& c,
                               Loop&& loop) {
  if (pairs.empty()) throw EmptySpectrum("no spectral pairs given");
  for (const auto& p : pairs) validate(p, c);
  std::vector<double> nearest(pairs.size(), std::numeric_limits<double>::infinity());
  loop(pairs.size(), [&](std::size_t i) {
    for (const auto& r : indicial_roots(pairs[i], c)) {
      nearest[i] = std::min(nearest[i], std::abs(r.delta.real() - eta));
    }
  });
  WeightCertificate cert;
  cert.distance = *std::min_element(nearest.begin(), nearest.end());
  cert.admissible = cert.distance > kWeightTolerance;
  return cert;
}

const auto parallel_loop = [](std::size_t count, auto&& body) {
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
};

const auto serial_loop = [](std::size_t count, auto&& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
};

}  // namespace

std::array<std::complex<double>, 2> indicial_s_roots(const SpectralPair& pair, const IndicialCoefficients& c) {
  validate(pair, c);
  // quartic * s^2 + b s + mu = 0
  const double a = c.quartic;
  const double b = -(c.cross * pair.lambda + c.linear);
  const double disc = b * b - 4.0 * a * pair.mu;
  if (disc >= 0.0) {
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) return {0.0, 0.0};
    const double s1 = q / a;
    const double s2 = pair.mu / q;
    return {std::complex<double>(std::min(s1, s2)), std::complex<double>(std::max(s1, s2))};
  }
  const double re = -b / (2.0 * a);
  const double im = std::sqrt(-disc) / (2.0 * a);
  return {std::complex<double>(re, -im), std::complex<double>(re, im)};
}

std::vector<IndicialRoot> indicial_roots(const SpectralPair& pair, const IndicialCoefficients& c) {
  std::vector<IndicialRoot> roots;
  roots.reserve(4);
  for (const auto& s : indicial_s_roots(pair, c)) {
    // delta^2 - delta - s = 0: the principal root has Re >= 1/2, and its
    // partner comes from the product of roots, -s.
    const std::complex<double> upper = 0.5 + std::sqrt(0.25 + s);
    const std::complex<double> lower = -s / upper;
    roots.push_back({lower, pair, s});
    roots.push_back({upper, pair, s});
  }
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

std::complex<double> indicial_polynomial(const SpectralPair& pair, std::complex<double> d,
                                         const IndicialCoefficients& c) {
  const double a = c.quartic;
  const double b = c.cross * pair.lambda + c.linear;
  // a (d^2 - d)^2 - b (d^2 - d) + mu, expanded.
  return (((a * d - 2.0 * a) * d + (a - b)) * d + b) * d + pair.mu;
}

double indicial_coefficient_norm(const SpectralPair& pair, const IndicialCoefficients& c) {
  const double a = c.quartic;
  const double b = c.cross * pair.lambda + c.linear;
  return std::abs(a) + std::abs(2.0 * a) + std::abs(a - b) + std::abs(b) + std::abs(pair.mu);
}

std::vector<IndicialRoot> roots_in_window(std::span<const SpectralPair> pairs, double lo, double hi,
                                          const IndicialCoefficients& c) {
  return window_impl(pairs, lo, hi, c, parallel_loop);
}

WeightCertificate certify_weight(std::span<const SpectralPair> pairs, double eta, const IndicialCoefficients& c) {
  return certify_impl(pairs, eta, c, parallel_loop);
}

namespace serial {

std::vector<IndicialRoot> roots_in_window(std::span<const SpectralPair> pairs, double lo, double hi,
                                          const IndicialCoefficients& c) {
  return window_impl(pairs, lo, hi, c, serial_loop);
}

WeightCertificate certify_weight(std::span<const SpectralPair> pairs, double eta, const IndicialCoefficients& c) {
  return certify_impl(pairs, eta, c, serial_loop);
}

}  // namespace serial

}  // namespace cuspcheck
