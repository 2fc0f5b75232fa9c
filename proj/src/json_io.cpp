#include "cuspcheck/json_io.hpp"

#include <regex>
#include <set>

namespace cuspcheck::io {

namespace {

class Collector {
 public:
  void add(std::string path, std::string message) { issues_.push_back({std::move(path), std::move(message)}); }
  bool ok() const { return issues_.empty(); }
  void raise_if_any() {
    if (!issues_.empty()) throw ValidationError(std::move(issues_));
  }

 private:
  std::vector<ValidationIssue> issues_;
};

std::optional<Rational> read_rational(const json& j, const std::string& path, Collector& errs) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError&) {
      errs.add(path, "invalid rational");
      return std::nullopt;
    }
  }
  errs.add(path, "expected a rational string \"p/q\" or an integer");
  return std::nullopt;
}

std::optional<Integer> read_integer(const json& j, const std::string& path, Collector& errs) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    static const std::regex integer_re("^[-+]?[0-9]+$");
    if (std::regex_match(s, integer_re)) return Integer(s.front() == '+' ? s.substr(1) : s);
  }
  errs.add(path, "expected an integer");
  return std::nullopt;
}

std::optional<RationalVector> read_rational_vector(const json& j, const std::string& path, std::optional<std::size_t> size,
                                                   Collector& errs) {
  if (!j.is_array()) {
    errs.add(path, "expected an array");
    return std::nullopt;
  }
  if (size && j.size() != *size) {
    errs.add(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
    return std::nullopt;
  }
  RationalVector out;
  bool good = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto r = read_rational(j[i], path + "/" + std::to_string(i), errs);
    if (r) out.push_back(*r);
    else good = false;
  }
  if (!good) return std::nullopt;
  return out;
}

std::optional<std::size_t> read_positive(const json& doc, const char* key, Collector& errs) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key)) {
    errs.add(path, "missing required field");
    return std::nullopt;
  }
  const auto& j = doc.at(key);
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    errs.add(path, "expected a positive integer");
    return std::nullopt;
  }
  return static_cast<std::size_t>(j.get<long long>());
}

std::optional<double> read_double(const json& j, const std::string& path, Collector& errs) {
  if (!j.is_number()) {
    errs.add(path, "expected a number");
    return std::nullopt;
  }
  return j.get<double>();
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error([&] {
        std::string msg = "invalid document:";
        for (const auto& i : issues) msg += " " + (i.path.empty() ? std::string("/") : i.path) + ": " + i.message + ";";
        return msg;
      }()),
      issues_(std::move(issues)) {}

DelzantPolytope parse_polytope(const json& doc) {
  Collector errs;
  if (!doc.is_object()) {
    errs.add("", "expected an object");
    errs.raise_if_any();
  }
  const auto dim = read_positive(doc, "dim", errs);
  std::vector<Facet> facets;
  if (!doc.contains("facets") || !doc.at("facets").is_array()) {
    errs.add("/facets", "expected an array of facets");
  } else {
    std::set<std::string> labels;
    const auto& arr = doc.at("facets");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string base = "/facets/" + std::to_string(i);
      const auto& f = arr[i];
      if (!f.is_object()) {
        errs.add(base, "expected an object");
        continue;
      }
      Facet facet;
      bool good = true;
      if (!f.contains("normal") || !f.at("normal").is_array()) {
        errs.add(base + "/normal", "expected an integer array");
        good = false;
      } else {
        const auto& nj = f.at("normal");
        for (std::size_t k = 0; k < nj.size(); ++k) {
          auto v = read_integer(nj[k], base + "/normal/" + std::to_string(k), errs);
          if (v) facet.normal.push_back(*v);
          else good = false;
        }
        if (good && dim && facet.normal.size() != *dim) {
          errs.add(base + "/normal", "expected " + std::to_string(*dim) + " entries");
          good = false;
        }
        if (good && !is_primitive(facet.normal)) {
          errs.add(base + "/normal", "normal not primitive");
          good = false;
        }
      }
      if (!f.contains("offset")) {
        errs.add(base + "/offset", "missing required field");
        good = false;
      } else if (auto c = read_rational(f.at("offset"), base + "/offset", errs)) {
        facet.offset = *c;
      } else {
        good = false;
      }
      if (f.contains("label")) {
        if (!f.at("label").is_string()) {
          errs.add(base + "/label", "expected a string");
          good = false;
        } else {
          facet.label = f.at("label").get<std::string>();
          if (!facet.label.empty() && !labels.insert(facet.label).second) {
            errs.add(base + "/label", "duplicate label \"" + facet.label + "\"");
            good = false;
          }
        }
      }
      if (good) facets.push_back(std::move(facet));
    }
  }
  errs.raise_if_any();
  return DelzantPolytope::create(*dim, std::move(facets));
}

json polytope_to_json(const DelzantPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets()) {
    json normal = json::array();
    for (const auto& x : f.normal) normal.push_back(x.convert_to<long long>());
    json jf = {{"normal", normal}, {"offset", to_json(f.offset)}};
    if (!f.label.empty()) jf["label"] = f.label;
    facets.push_back(std::move(jf));
  }
  return {{"dim", p.dim()}, {"facets", facets}};
}

MomentConfiguration parse_configuration(const json& doc) {
  Collector errs;
  if (!doc.is_object()) {
    errs.add("", "expected an object");
    errs.raise_if_any();
  }
  MomentConfiguration cfg;
  if (auto n = read_positive(doc, "n", errs)) cfg.n = *n;
  std::optional<std::size_t> h;
  if (doc.contains("h_dim")) h = read_positive(doc, "h_dim", errs);
  auto first_len = [&](const char* key) -> std::optional<std::size_t> {
    if (doc.contains(key) && doc.at(key).is_array() && !doc.at(key).empty() && doc.at(key)[0].is_array())
      return doc.at(key)[0].size();
    return std::nullopt;
  };
  if (!h) h = first_len("t_basis");
  if (!h) h = first_len("points");
  if (!h) errs.add("/h_dim", "cannot infer dim h: give h_dim, a t_basis column or a point");

  auto read_vectors = [&](const char* key, bool required) {
    std::vector<RationalVector> out;
    const std::string path = std::string("/") + key;
    if (!doc.contains(key)) {
      if (required) errs.add(path, "missing required field");
      return out;
    }
    const auto& arr = doc.at(key);
    if (!arr.is_array()) {
      errs.add(path, "expected an array");
      return out;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (auto v = read_rational_vector(arr[i], path + "/" + std::to_string(i), h, errs)) out.push_back(*v);
    }
    return out;
  };
  cfg.points = read_vectors("points", true);
  const auto columns = read_vectors("t_basis", true);
  if (doc.contains("weights")) {
    if (auto w = read_rational_vector(doc.at("weights"), "/weights", std::nullopt, errs)) {
      cfg.weights = *w;
      for (std::size_t i = 0; i < w->size(); ++i)
        if ((*w)[i] <= 0) errs.add("/weights/" + std::to_string(i), "weight must be positive");
    }
  } else {
    errs.add("/weights", "missing required field");
  }
  if (doc.contains("eval_matrix")) {
    const auto& arr = doc.at("eval_matrix");
    if (!arr.is_array()) {
      errs.add("/eval_matrix", "expected an array of rows");
    } else {
      std::vector<RationalVector> rows;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (auto v = read_rational_vector(arr[i], "/eval_matrix/" + std::to_string(i), h, errs)) rows.push_back(*v);
      }
      if (h) cfg.eval_matrix = RationalMatrix::from_rows(rows, *h);
    }
  }
  errs.raise_if_any();
  if (cfg.weights.size() != cfg.points.size()) {
    throw ValidationError(std::vector<ValidationIssue>{{"/weights", "expected one weight per point"}});
  }
  cfg.t_basis = RationalMatrix::from_columns(columns, *h);
  if (rank(cfg.t_basis) != cfg.t_basis.cols()) {
    throw ValidationError(std::vector<ValidationIssue>{{"/t_basis", "columns must be linearly independent"}});
  }
  cfg.validate();
  return cfg;
}

json configuration_to_json(const MomentConfiguration& cfg) {
  json points = json::array();
  for (const auto& p : cfg.points) points.push_back(to_json(p));
  json columns = json::array();
  for (std::size_t j = 0; j < cfg.t_basis.cols(); ++j) columns.push_back(to_json(cfg.t_basis.col(j)));
  json doc = {{"n", cfg.n}, {"h_dim", cfg.h_dim()}, {"points", points}, {"weights", to_json(cfg.weights)},
              {"t_basis", columns}};
  if (cfg.eval_matrix) doc["eval_matrix"] = to_json(*cfg.eval_matrix);
  return doc;
}

Spectrum parse_spectrum(const json& doc) {
  Collector errs;
  Spectrum s;
  if (!doc.is_object()) {
    errs.add("", "expected an object");
    errs.raise_if_any();
  }
  if (doc.contains("scale")) {
    if (auto a = read_double(doc.at("scale"), "/scale", errs)) {
      if (*a > 0) s.scale = *a;
      else errs.add("/scale", "scale must be positive");
    }
  }
  if (!doc.contains("pairs") || !doc.at("pairs").is_array()) {
    errs.add("/pairs", "expected an array of spectral pairs");
  } else {
    const auto& arr = doc.at("pairs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string base = "/pairs/" + std::to_string(i);
      const auto& pj = arr[i];
      if (!pj.is_object()) {
        errs.add(base, "expected an object");
        continue;
      }
      SpectralPair pair;
      pair.scale = s.scale;
      bool good = true;
      for (const char* key : {"lambda", "mu"}) {
        if (!pj.contains(key)) {
          errs.add(base + "/" + key, "missing required field");
          good = false;
          continue;
        }
        auto v = read_double(pj.at(key), base + "/" + key, errs);
        if (!v) {
          good = false;
        } else if (*v < 0) {
          errs.add(base + "/" + key, "must be nonnegative");
          good = false;
        } else {
          (std::string(key) == "lambda" ? pair.lambda : pair.mu) = *v;
        }
      }
      if (pj.contains("mult")) {
        if (!pj.at("mult").is_number_integer() || pj.at("mult").get<long long>() < 1) {
          errs.add(base + "/mult", "expected a positive integer");
          good = false;
        } else {
          pair.multiplicity = static_cast<int>(pj.at("mult").get<long long>());
        }
      }
      if (good) s.pairs.push_back(pair);
    }
  }
  if (doc.contains("coefficients")) {
    const auto& cj = doc.at("coefficients");
    IndicialCoefficients c;
    if (!cj.is_object()) {
      errs.add("/coefficients", "expected an object");
    } else {
      for (auto [key, field] : {std::pair{"quartic", &c.quartic}, {"cross", &c.cross}, {"linear", &c.linear}}) {
        if (cj.contains(key)) {
          if (auto v = read_double(cj.at(key), std::string("/coefficients/") + key, errs)) *field = *v;
        }
      }
      if (!(c.quartic > 0)) errs.add("/coefficients/quartic", "must be positive");
      s.coefficients = c;
    }
  }
  errs.raise_if_any();
  return s;
}

json spectrum_to_json(const Spectrum& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs) pairs.push_back({{"lambda", p.lambda}, {"mu", p.mu}, {"mult", p.multiplicity}});
  json doc = {{"pairs", pairs}, {"scale", s.scale}};
  if (s.coefficients) {
    doc["coefficients"] = {
        {"quartic", s.coefficients->quartic}, {"cross", s.coefficients->cross}, {"linear", s.coefficients->linear}};
  }
  return doc;
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const AffineFunction& a) { return {{"constant", to_json(a.constant)}, {"gradient", to_json(a.gradient)}}; }

std::string facet_name(const DelzantPolytope& p, std::size_t i) {
  const auto& label = p.facet(i).label;
  return label.empty() ? std::to_string(i) : label;
}

json obstruction_to_json(const DelzantPolytope& p, const ObstructionReport& r) {
  json basis = json::array();
  for (std::size_t k = 0; k < r.chart.basis.cols(); ++k) {
    json col = json::array();
    for (std::size_t i = 0; i < r.chart.basis.rows(); ++i) col.push_back(r.chart.basis(i, k).convert_to<long long>());
    basis.push_back(std::move(col));
  }
  return {{"facet", facet_name(p, r.facet)},
          {"satisfied", r.satisfied},
          {"offset", r.offset ? to_json(*r.offset) : json(nullptr)},
          {"difference_gradient", to_json(r.difference_gradient)},
          {"pair_affine", to_json(r.pair)},
          {"restricted_affine", to_json(r.restricted)},
          {"facet_affine", to_json(r.facet_function)},
          {"chart", {{"origin", to_json(r.chart.origin)}, {"basis", basis}}}};
}

json decimal_view(const json& doc, int digits) {
  static const std::regex rational_re("^-?[0-9]+(/[0-9]+)?$");
  if (doc.is_string()) {
    const auto& s = doc.get_ref<const std::string&>();
    if (std::regex_match(s, rational_re)) return to_decimal(parse_rational(s), digits);
    return doc;
  }
  if (doc.is_object()) {
    // Facet names may look like integers; keep them verbatim.
    static const std::set<std::string> name_keys = {"facet", "label", "excluded", "active_facets", "new_facets"};
    json out = doc;
    for (auto it = out.begin(); it != out.end(); ++it)
      if (!name_keys.count(it.key())) *it = decimal_view(*it, digits);
    return out;
  }
  if (doc.is_array()) {
    json out = doc;
    for (auto& x : out) x = decimal_view(x, digits);
    return out;
  }
  return doc;
}

}  // namespace cuspcheck::io
