#pragma once

#include <array>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace cuspcheck {

/// Eigenvalue data on the divisor: lambda for its Laplacian (nonnegative
/// spectrum convention) and mu for its Lichnerowicz operator.
struct SpectralPair {
  double lambda = 0.0;
  double mu = 0.0;
  int multiplicity = 1;
  double scale = 1.0;
};

/// Weights of the model operator on the cusp end, acting on S^1-invariant
/// f = e^{delta t} phi with s = delta^2 - delta:
///   quartic * s^2 - (cross * lambda + linear) * s + mu = 0.
/// The defaults are the unit-scale cusp metric.
struct IndicialCoefficients {
  double quartic = 0.5;
  double cross = 1.0;
  double linear = 0.5;

  bool is_unit_scale() const { return quartic == 0.5 && cross == 1.0 && linear == 0.5; }
};

inline constexpr std::string_view kLaplacianConvention =
    "Delta_D has nonnegative spectrum; f = exp(delta t) phi with Delta_D phi = lambda phi";

struct IndicialRoot {
  std::complex<double> delta;
  SpectralPair source;
  std::complex<double> s_value;
};

/// The two roots s of the quadratic in s, smaller real part first.
std::array<std::complex<double>, 2> indicial_s_roots(const SpectralPair& pair, const IndicialCoefficients& c = {});

/// All four delta (with repetition), sorted by (real, imag).
std::vector<IndicialRoot> indicial_roots(const SpectralPair& pair, const IndicialCoefficients& c = {});

/// The quartic in delta evaluated in expanded form.
std::complex<double> indicial_polynomial(const SpectralPair& pair, std::complex<double> delta,
                                         const IndicialCoefficients& c = {});

/// Sum of absolute values of the quartic's coefficients in delta.
double indicial_coefficient_norm(const SpectralPair& pair, const IndicialCoefficients& c = {});

/// Roots whose real part lies in the open interval (lo, hi), over all pairs,
/// sorted. Parallel over pairs; output order is deterministic.
std::vector<IndicialRoot> roots_in_window(std::span<const SpectralPair> pairs, double lo, double hi,
                                          const IndicialCoefficients& c = {});

struct WeightCertificate {
  bool admissible = false;  // no root real part within tolerance of eta
  double distance = 0.0;    // min |Re delta - eta|
};

inline constexpr double kWeightTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-12;

WeightCertificate certify_weight(std::span<const SpectralPair> pairs, double eta, const IndicialCoefficients& c = {});

namespace serial {

std::vector<IndicialRoot> roots_in_window(std::span<const SpectralPair> pairs, double lo, double hi,
                                          const IndicialCoefficients& c = {});
WeightCertificate certify_weight(std::span<const SpectralPair> pairs, double eta, const IndicialCoefficients& c = {});

}  // namespace serial

}  // namespace cuspcheck
