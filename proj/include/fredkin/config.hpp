#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fredkin/gate.hpp"
#include "fredkin/params.hpp"
#include "fredkin/sweep.hpp"

namespace fredkin {

// Config file grammar: INI-style sections, `key = value` lines, `;` or `#`
// comments. All physical inputs are ratios to g except in [physical].
//
//   [model]          kind, omega_over_g, delta_over_g, kappa_over_g,
//                    gamma_over_g, n_max, dissipator, probe
//   [sweep]          kappa_min, kappa_max, kappa_count,
//                    gamma_min, gamma_max, gamma_count, output
//   [truth-table]    floor
//   [physical]       g_mhz, kappa_mhz, gamma_mhz   (all in units of 2π·MHz)
//   [zeno-report]    degeneracy_tol
//   [analytic-compare] samples
//
// Unknown sections or keys are errors.

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct PhysicalRates {
  double g_mhz = 750.0;
  double kappa_mhz = 3.5;
  double gamma_mhz = 2.62;
};

struct RunConfig {
  ModelKind model = ModelKind::resonant;
  double omega_over_g = 0.03;
  double delta_over_g = 0.3;
  double kappa_over_g = 0.0;
  double gamma_over_g = 0.0;
  int n_max = 1;
  DissipatorConvention dissipator = DissipatorConvention::conventional;
  ProbeState probe = ProbeState::phased;

  Grid kappa_grid;
  Grid gamma_grid;
  std::string output;

  double truth_table_floor = 0.99;
  PhysicalRates physical;
  double degeneracy_tol = 1e-6;
  int samples = 50;

  /// ModelParams for `kind` in natural units (g = 1).
  ModelParams params(ModelKind kind) const;
  ModelParams params() const { return params(model); }
  SweepConfig sweep() const;

  /// Cross-field checks; throws ConfigError naming the key.
  void validate() const;
};

RunConfig parse_config(std::string_view text);
/// Throws ConfigError (key "file") if the file cannot be read.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace fredkin
