#include "fredkin/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace fredkin {
namespace {

using Setter = std::function<void(RunConfig&, const std::string&)>;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key, "invalid number '" + text + "'");
  }
  return value;
}

double to_nonnegative(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (!(v >= 0.0)) throw ConfigError(key, "must be non-negative");
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key, "invalid integer '" + text + "'");
  }
  return value;
}

template <typename Parse>
auto to_enum(const std::string& key, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key, e.what());
  }
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"model.kind", [](RunConfig& c, const std::string& v) { c.model = to_enum("model.kind", v, parse_model_kind); }},
      {"model.omega_over_g", [](RunConfig& c, const std::string& v) { c.omega_over_g = to_nonnegative("model.omega_over_g", v); }},
      {"model.delta_over_g", [](RunConfig& c, const std::string& v) { c.delta_over_g = to_nonnegative("model.delta_over_g", v); }},
      {"model.kappa_over_g", [](RunConfig& c, const std::string& v) { c.kappa_over_g = to_nonnegative("model.kappa_over_g", v); }},
      {"model.gamma_over_g", [](RunConfig& c, const std::string& v) { c.gamma_over_g = to_nonnegative("model.gamma_over_g", v); }},
      {"model.n_max", [](RunConfig& c, const std::string& v) { c.n_max = to_int("model.n_max", v); }},
      {"model.dissipator", [](RunConfig& c, const std::string& v) { c.dissipator = to_enum("model.dissipator", v, parse_dissipator); }},
      {"model.probe", [](RunConfig& c, const std::string& v) { c.probe = to_enum("model.probe", v, parse_probe_state); }},
      {"sweep.kappa_min", [](RunConfig& c, const std::string& v) { c.kappa_grid.min = to_nonnegative("sweep.kappa_min", v); }},
      {"sweep.kappa_max", [](RunConfig& c, const std::string& v) { c.kappa_grid.max = to_nonnegative("sweep.kappa_max", v); }},
      {"sweep.kappa_count", [](RunConfig& c, const std::string& v) { c.kappa_grid.count = to_int("sweep.kappa_count", v); }},
      {"sweep.gamma_min", [](RunConfig& c, const std::string& v) { c.gamma_grid.min = to_nonnegative("sweep.gamma_min", v); }},
      {"sweep.gamma_max", [](RunConfig& c, const std::string& v) { c.gamma_grid.max = to_nonnegative("sweep.gamma_max", v); }},
      {"sweep.gamma_count", [](RunConfig& c, const std::string& v) { c.gamma_grid.count = to_int("sweep.gamma_count", v); }},
      {"sweep.output", [](RunConfig& c, const std::string& v) { c.output = v; }},
      {"truth-table.floor", [](RunConfig& c, const std::string& v) { c.truth_table_floor = to_double("truth-table.floor", v); }},
      {"physical.g_mhz", [](RunConfig& c, const std::string& v) { c.physical.g_mhz = to_double("physical.g_mhz", v); }},
      {"physical.kappa_mhz", [](RunConfig& c, const std::string& v) { c.physical.kappa_mhz = to_nonnegative("physical.kappa_mhz", v); }},
      {"physical.gamma_mhz", [](RunConfig& c, const std::string& v) { c.physical.gamma_mhz = to_nonnegative("physical.gamma_mhz", v); }},
      {"zeno-report.degeneracy_tol", [](RunConfig& c, const std::string& v) { c.degeneracy_tol = to_double("zeno-report.degeneracy_tol", v); }},
      {"analytic-compare.samples", [](RunConfig& c, const std::string& v) { c.samples = to_int("analytic-compare.samples", v); }},
  };
  return table;
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

ModelParams RunConfig::params(ModelKind kind) const {
  ModelParams p = kind == ModelKind::resonant
                      ? ModelParams::resonant(omega_over_g, kappa_over_g, gamma_over_g)
                      : ModelParams::detuned(omega_over_g, delta_over_g, kappa_over_g, gamma_over_g);
  p.n_max = n_max;
  p.dissipator = dissipator;
  return p;
}

SweepConfig RunConfig::sweep() const {
  SweepConfig s;
  s.model = model;
  s.omega_over_g = omega_over_g;
  s.delta_over_g = delta_over_g;
  s.kappa = kappa_grid;
  s.gamma = gamma_grid;
  s.n_max = n_max;
  s.dissipator = dissipator;
  s.probe = probe;
  s.output = output;
  return s;
}

void RunConfig::validate() const {
  if (n_max < 1 || n_max > kMaxPhotons) throw ConfigError("model.n_max", "must be in [1, 3]");
  if (!(omega_over_g > 0.0)) throw ConfigError("model.omega_over_g", "must be positive");
  if (model == ModelKind::detuned && !(delta_over_g > 0.0)) {
    throw ConfigError("model.delta_over_g", "must be positive for the detuned model");
  }
  if (kappa_grid.count < 2) throw ConfigError("sweep.kappa_count", "must be at least 2");
  if (gamma_grid.count < 2) throw ConfigError("sweep.gamma_count", "must be at least 2");
  if (kappa_grid.min > kappa_grid.max) throw ConfigError("sweep.kappa_min", "exceeds sweep.kappa_max");
  if (gamma_grid.min > gamma_grid.max) throw ConfigError("sweep.gamma_min", "exceeds sweep.gamma_max");
  if (!(truth_table_floor >= 0.0 && truth_table_floor <= 1.0)) {
    throw ConfigError("truth-table.floor", "must be in [0, 1]");
  }
  if (!(physical.g_mhz > 0.0)) throw ConfigError("physical.g_mhz", "must be positive");
  if (!(degeneracy_tol > 0.0)) throw ConfigError("zeno-report.degeneracy_tol", "must be positive");
  if (samples < 2) throw ConfigError("analytic-compare.samples", "must be at least 2");
}

RunConfig parse_config(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }

  RunConfig config;
  static const std::set<std::string> sections = {"model",    "sweep",       "truth-table",
                                                 "physical", "zeno-report", "analytic-compare"};
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(section, "key outside of any section");
    }
    if (!sections.contains(section)) throw ConfigError(section, "unknown section");
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      const auto it = setters().find(full);
      if (it == setters().end()) throw ConfigError(full, "unknown key");
      std::string value = trim(node.get_value<std::string>());
      // Inline comments after the value.
      if (const auto hash = value.find_first_of(";#"); hash != std::string::npos) {
        value = trim(value.substr(0, hash));
      }
      it->second(config, value);
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("file", "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace fredkin
