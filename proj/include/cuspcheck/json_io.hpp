#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuspcheck/errors.hpp"
#include "cuspcheck/extremal.hpp"
#include "cuspcheck/indicial.hpp"
#include "cuspcheck/obstruction.hpp"
#include "cuspcheck/polytope.hpp"

namespace cuspcheck::io {

using nlohmann::json;

struct ValidationIssue {
  std::string path;  // JSON pointer
  std::string message;
};

/// Every schema problem found in a document, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// {"dim": n, "facets": [{"normal": [int...], "offset": "p/q", "label": "..."}]}
DelzantPolytope parse_polytope(const json& doc);
json polytope_to_json(const DelzantPolytope& p);

/// {"n": 2, "h_dim": 2, "points": [["p/q",...]], "weights": ["p/q",...],
///  "t_basis": [[column], ...], "eval_matrix": [[row], ...]}
MomentConfiguration parse_configuration(const json& doc);
json configuration_to_json(const MomentConfiguration& cfg);

struct Spectrum {
  std::vector<SpectralPair> pairs;
  double scale = 1.0;
  std::optional<IndicialCoefficients> coefficients;
};

/// {"pairs": [{"lambda": x, "mu": y, "mult": m}], "scale": a,
///  "coefficients": {"quartic": q, "cross": c, "linear": l}}
Spectrum parse_spectrum(const json& doc);
json spectrum_to_json(const Spectrum& s);

json to_json(const Rational& r);
json to_json(const RationalVector& v);
json to_json(const RationalMatrix& m);  // list of rows
json to_json(const AffineFunction& a);

/// Label if present, otherwise the decimal index.
std::string facet_name(const DelzantPolytope& p, std::size_t i);

json obstruction_to_json(const DelzantPolytope& p, const ObstructionReport& r);

/// Copy of `doc` with every rational string replaced by a decimal rendering.
json decimal_view(const json& doc, int digits);

}  // namespace cuspcheck::io
