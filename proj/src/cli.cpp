#include "cuspcheck/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "cuspcheck/blowup.hpp"
#include "cuspcheck/extremal.hpp"
#include "cuspcheck/indicial.hpp"
#include "cuspcheck/json_io.hpp"
#include "cuspcheck/moments.hpp"
#include "cuspcheck/obstruction.hpp"

namespace cuspcheck::cli {

namespace {

using io::json;

struct Context {
  std::istream& in;
  std::string input_bytes;  // everything read, for the digest
  std::vector<std::string> diagnostics;
  int exit_code = kSuccess;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

json read_document(Context& ctx, const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input file \"" + path + "\"");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  ctx.input_bytes += text;
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in \"" + path + "\": " + e.what());
  }
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("expected a comma-separated list of rationals");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid number \"" + item + "\"");
    }
  }
  return out;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json vertex_list(const DelzantPolytope& p, std::span<const RationalVector> points) {
  (void)p;
  json out = json::array();
  for (const auto& v : points) out.push_back(io::to_json(v));
  return out;
}

// ---- subcommands -----------------------------------------------------------

json cmd_vertices(Context& ctx, const std::string& input) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const auto report = is_delzant(p);
  json vertices = json::array();
  for (const auto& v : enumerate_vertices(p)) {
    json active = json::array();
    for (auto f : v.active_facets) active.push_back(io::facet_name(p, f));
    vertices.push_back({{"point", io::to_json(v.point)}, {"active_facets", active}});
  }
  json violating = json::array();
  for (auto k : report.violating_vertices) violating.push_back(io::to_json(p.vertices()[k].point));
  return {{"dim", p.dim()}, {"vertices", vertices}, {"delzant", report.delzant}, {"violating_vertices", violating}};
}

std::vector<std::size_t> resolve_facets(const DelzantPolytope& p, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(p.find_facet(l));
  return out;
}

json cmd_moments(Context& ctx, const std::string& input, const std::vector<std::string>& exclude) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const auto excluded = resolve_facets(p, exclude);
  const auto m = polytope_moments(p);
  const auto b = boundary_moments(p, excluded);
  json facets = json::array();
  for (const auto& f : b.facets) {
    facets.push_back({{"facet", io::facet_name(p, f.facet)},
                      {"measure", io::to_json(f.measure)},
                      {"first_moments", io::to_json(f.first_moments)}});
  }
  json ex = json::array();
  for (auto e : b.excluded) ex.push_back(io::facet_name(p, e));
  return {{"volume", io::to_json(m.volume)},
          {"first_moments", io::to_json(m.first_moments)},
          {"second_moments", io::to_json(m.second_moments)},
          {"gram_positive_definite", is_positive_definite(m.gram())},
          {"boundary",
           {{"excluded", ex},
            {"total_measure", io::to_json(b.total_measure())},
            {"total_first_moments", io::to_json(b.total_first_moments())},
            {"facets", facets}}}};
}

json cmd_extremal(Context& ctx, const std::string& input, const std::vector<std::string>& exclude) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const auto excluded = resolve_facets(p, exclude);
  const auto r = extremal_affine(p, excluded);
  if (r.multi_facet_exclusion) {
    ctx.diagnostics.push_back(
        "more than one excluded facet: the defining functional is formulated for a single divisor; "
        "the same formula was applied");
  }
  json ex = json::array();
  for (auto e : r.excluded) ex.push_back(io::facet_name(p, e));
  return {{"excluded", ex},
          {"constant", io::to_json(r.affine.constant)},
          {"gradient", io::to_json(r.affine.gradient)},
          {"residuals", io::to_json(r.residuals)},
          {"gram", io::to_json(r.gram)},
          {"rhs", io::to_json(r.rhs)}};
}

json history_json(const std::vector<BlowupSpec>& history) {
  json out = json::array();
  for (const auto& h : history) {
    out.push_back({{"vertex", io::to_json(h.vertex)}, {"parameter", io::to_json(h.parameter)}, {"facet", h.label}});
  }
  return out;
}

json cmd_blowup(Context& ctx, const std::string& input, const std::string& vertex, const std::string& eps) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const RationalVector v = parse_rational_list(vertex);
  const Rational depth = parse_rational(eps);
  const Rational bound = max_chop_parameter(p, v);
  BlowupSpec spec;
  const auto q = blow_up_vertex(p, v, depth, spec);
  return {{"polytope", io::polytope_to_json(q)},
          {"history", history_json({spec})},
          {"max_chop_parameter", io::to_json(bound)},
          {"delzant", is_delzant(q).delzant}};
}

json cmd_tower(Context& ctx, const std::string& input, const std::string& facet, int rounds, const std::string& eps) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const std::size_t f = p.find_facet(facet);
  const RationalVector schedule = parse_rational_list(eps);
  if (rounds < 1) throw InvalidArgument("--rounds must be at least 1");
  if (schedule.size() != 1 && schedule.size() != static_cast<std::size_t>(rounds)) {
    throw InvalidArgument("--eps needs one value or one value per round");
  }
  if (std::adjacent_find(schedule.begin(), schedule.end(), std::not_equal_to<>()) != schedule.end()) {
    ctx.diagnostics.push_back(
        "depth varies between rounds; within each round all chops share one depth, which is what the "
        "symmetry argument needs");
  }
  TowerState state = TowerState::start(p, f);
  json initial = io::obstruction_to_json(state.polytope, check_facet_condition(state.polytope, f));
  json round_reports = json::array();
  for (int r = 0; r < rounds; ++r) {
    const Rational depth = schedule.size() == 1 ? schedule.front() : schedule[static_cast<std::size_t>(r)];
    const auto chopped = state.pending;
    const std::size_t before = state.history.size();
    state = tower_step(state, depth);
    json new_facets = json::array();
    for (std::size_t h = before; h < state.history.size(); ++h) new_facets.push_back(state.history[h].label);
    const auto obstruction = check_facet_condition(state.polytope, f);
    round_reports.push_back({{"round", state.round},
                             {"parameter", io::to_json(depth)},
                             {"chopped", vertex_list(state.polytope, chopped)},
                             {"new_facets", new_facets},
                             {"delzant", is_delzant(state.polytope).delzant},
                             {"obstruction", io::obstruction_to_json(state.polytope, obstruction)}});
  }
  return {{"polytope", io::polytope_to_json(state.polytope)},
          {"divisor", io::facet_name(state.polytope, f)},
          {"initial_obstruction", initial},
          {"rounds", round_reports},
          {"history", history_json(state.history)}};
}

json cmd_check_obstruction(Context& ctx, const std::string& input, const std::string& facet) {
  const auto p = io::parse_polytope(read_document(ctx, input));
  const auto r = check_facet_condition(p, p.find_facet(facet));
  if (!r.satisfied) ctx.exit_code = kConditionViolated;
  return io::obstruction_to_json(p, r);
}

json cmd_check_hypotheses(Context& ctx, const std::string& input, const std::string& toric, const std::string& facet) {
  MomentConfiguration cfg;
  std::string source;
  if (!toric.empty()) {
    if (facet.empty()) throw InvalidArgument("--toric needs --facet");
    const auto p = io::parse_polytope(read_document(ctx, toric));
    cfg = toric_configuration(p, p.find_facet(facet));
    source = "toric";
  } else {
    if (input.empty()) throw InvalidArgument("check-hypotheses needs a configuration file or --toric");
    cfg = io::parse_configuration(read_document(ctx, input));
    source = "configuration";
  }
  const auto balance = check_balance(cfg);
  const bool generic = check_genericity(cfg);
  json kernel = nullptr;
  bool all = balance.satisfied && generic;
  if (cfg.eval_matrix) {
    const bool k = check_kernel_condition(cfg);
    kernel = k;
    all = all && k;
  } else {
    ctx.diagnostics.push_back("no eval_matrix given: kernel condition not evaluated");
  }
  if (!all) ctx.exit_code = kConditionViolated;
  return {{"source", source},
          {"configuration", io::configuration_to_json(cfg)},
          {"balance",
           {{"satisfied", balance.satisfied},
            {"weighted_sum", io::to_json(balance.weighted_sum)},
            {"residual", io::to_json(balance.residual)}}},
          {"genericity", generic},
          {"kernel_condition", kernel},
          {"satisfied", all}};
}

json cmd_indicial(Context& ctx, const std::string& pairs_path, const std::string& window, const std::string& eta) {
  const auto spectrum = io::parse_spectrum(read_document(ctx, pairs_path));
  if (spectrum.pairs.empty()) throw EmptySpectrum("no spectral pairs given");
  const IndicialCoefficients coeffs = spectrum.coefficients.value_or(IndicialCoefficients{});
  if (spectrum.scale != 1.0 && !spectrum.coefficients) {
    ctx.diagnostics.push_back(
        "scale != 1 without explicit coefficients: unit-scale coefficients used, no scaling law applied");
  }
  std::vector<IndicialRoot> roots;
  json window_json = nullptr;
  if (!window.empty()) {
    const auto bounds = parse_double_list(window);
    if (bounds.size() != 2) throw ParseError("--window expects lo,hi");
    roots = roots_in_window(spectrum.pairs, bounds[0], bounds[1], coeffs);
    window_json = {bounds[0], bounds[1]};
  } else {
    for (const auto& p : spectrum.pairs) {
      const auto r = indicial_roots(p, coeffs);
      roots.insert(roots.end(), r.begin(), r.end());
    }
  }
  json root_list = json::array();
  for (const auto& r : roots) {
    root_list.push_back({{"delta", complex_json(r.delta)},
                         {"s", complex_json(r.s_value)},
                         {"lambda", r.source.lambda},
                         {"mu", r.source.mu},
                         {"mult", r.source.multiplicity}});
  }
  json certificate = nullptr;
  if (!eta.empty()) {
    const auto e = parse_double_list(eta);
    if (e.size() != 1) throw ParseError("--eta expects a single number");
    const auto c = certify_weight(spectrum.pairs, e[0], coeffs);
    certificate = {{"eta", e[0]}, {"admissible", c.admissible}, {"distance", c.distance}};
  }
  return {{"convention", std::string(kLaplacianConvention)},
          {"coefficients", {{"quartic", coeffs.quartic}, {"cross", coeffs.cross}, {"linear", coeffs.linear}}},
          {"scale", spectrum.scale},
          {"window", window_json},
          {"roots", root_list},
          {"certificate", certificate}};
}

// ---- rendering -------------------------------------------------------------

bool color_enabled() {
  const char* env = std::getenv("CUSPCHECK_COLOR");
  return !(env && std::string(env) == "0");
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  const bool leaf_array = j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !leaf_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void render_pretty(const json& report, std::ostream& out) {
  const bool color = color_enabled();
  out << "cuspcheck " << report["version"].get<std::string>() << "  " << report["command"].get<std::string>() << "\n";
  const auto& result = report["result"];
  if (result.is_object() && result.contains("satisfied") && result["satisfied"].is_boolean()) {
    const bool ok = result["satisfied"].get<bool>();
    const std::string word = ok ? "SATISFIED" : "VIOLATED";
    out << "status: " << (color ? (ok ? "\033[32m" : "\033[31m") : "") << word << (color ? "\033[0m" : "") << "\n";
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks the hypotheses of the Poincare-type blow-up construction on toric data", "cuspcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  int float_digits = -1;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  app.add_flag("--exact", "Exact rational output (default; always on)");
  app.add_option("--float", float_digits, "Also render every rational with this many decimal digits");
  app.set_version_flag("--version", kVersion);

  std::string input = "-", facet, vertex, eps, toric, pairs, window, eta;
  std::vector<std::string> excluded;
  int rounds = 1;

  auto* vertices = app.add_subcommand("vertices", "Enumerate vertices and check the Delzant condition");
  vertices->add_option("input", input, "Polytope JSON ('-' for stdin)");

  auto* moments = app.add_subcommand("moments", "Exact interior and boundary moments");
  moments->add_option("input", input, "Polytope JSON");
  moments->add_option("--exclude", excluded, "Facet label to drop from the boundary (repeatable)");

  auto* extremal = app.add_subcommand("extremal-affine", "Extremal affine function of a polytope or pair");
  extremal->add_option("input", input, "Polytope JSON");
  extremal->add_option("--facet", excluded, "Excluded (divisor) facet label; omit for the compact case");

  auto* blowup = app.add_subcommand("blowup", "Chop a single vertex");
  blowup->add_option("input", input, "Polytope JSON");
  blowup->add_option("--vertex", vertex, "Vertex coordinates, comma separated")->required();
  blowup->add_option("--eps", eps, "Chop depth p/q")->required();

  auto* tower = app.add_subcommand("tower", "Iterated blow-up of all new fixed points");
  tower->add_option("input", input, "Polytope JSON");
  tower->add_option("--facet", facet, "Divisor facet label")->required();
  tower->add_option("--rounds", rounds, "Number of rounds");
  tower->add_option("--eps", eps, "Depth per round: p/q or p/q,p/q,...")->required();

  auto* obstruction = app.add_subcommand("check-obstruction", "Divisor condition for a facet");
  obstruction->add_option("input", input, "Polytope JSON");
  obstruction->add_option("--facet", facet, "Divisor facet label")->required();

  auto* hypotheses = app.add_subcommand("check-hypotheses", "Balancing, genericity and kernel conditions");
  hypotheses->add_option("input", input, "MomentConfiguration JSON");
  hypotheses->add_option("--toric", toric, "Fill the configuration from a polytope instead");
  hypotheses->add_option("--facet", facet, "Divisor facet for --toric");

  auto* indicial = app.add_subcommand("indicial-roots", "Indicial roots of the model operator");
  indicial->add_option("--pairs", pairs, "Spectrum JSON")->required();
  indicial->add_option("--window", window, "Keep roots with real part in (lo,hi)");
  indicial->add_option("--eta", eta, "Certify a weight");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Context ctx{in, {}, {}, kSuccess};
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json report = {{"command", command}, {"version", kVersion}, {"schema", kReportSchema}};
  json result;
  int code = kSuccess;
  try {
    if (sub == vertices) result = cmd_vertices(ctx, input);
    else if (sub == moments) result = cmd_moments(ctx, input, excluded);
    else if (sub == extremal) result = cmd_extremal(ctx, input, excluded);
    else if (sub == blowup) result = cmd_blowup(ctx, input, vertex, eps);
    else if (sub == tower) result = cmd_tower(ctx, input, facet, rounds, eps);
    else if (sub == obstruction) result = cmd_check_obstruction(ctx, input, facet);
    else if (sub == hypotheses) result = cmd_check_hypotheses(ctx, toric.empty() ? input : "", toric, facet);
    else result = cmd_indicial(ctx, pairs, window, eta);
    code = ctx.exit_code;
  } catch (const io::ValidationError& e) {
    json issues = json::array();
    for (const auto& i : e.issues()) issues.push_back({{"path", i.path}, {"message", i.message}});
    report["error"] = {{"kind", "validation"}, {"message", e.what()}, {"issues", issues}};
    err << "error: " << e.what() << "\n";
    code = kInputError;
  } catch (const Error& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
    code = kInputError;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    err << "internal error: " << e.what() << "\n";
    code = kInternalError;
  }
  report["inputs_digest"] = "sha256:" + sha256_hex(ctx.input_bytes);
  report["result"] = result;
  report["diagnostics"] = ctx.diagnostics;
  if (float_digits >= 0 && !result.is_null()) report["result_decimal"] = io::decimal_view(result, float_digits);

  if (pretty) render_pretty(report, out);
  else out << report.dump(2) << "\n";
  return code;
}

}  // namespace cuspcheck::cli
