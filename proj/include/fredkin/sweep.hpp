#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fredkin/gate.hpp"
#include "fredkin/params.hpp"

namespace fredkin {

// Evenly spaced closed interval [min, max] with `count` points.
struct Grid {
  double min = 0.0;
  double max = 0.1;
  int count = 21;

  double at(int i) const;
};

struct SweepConfig {
  ModelKind model = ModelKind::resonant;
  double omega_over_g = 0.03;
  double delta_over_g = 0.3;
  Grid kappa;
  Grid gamma;
  int n_max = 1;
  DissipatorConvention dissipator = DissipatorConvention::conventional;
  ProbeState probe = ProbeState::phased;
  std::string output;

  /// Throws std::invalid_argument.
  void validate() const;
  ModelParams params_at(double kappa_over_g, double gamma_over_g) const;
};

struct SweepRow {
  ModelKind model = ModelKind::resonant;
  double kappa_over_g = 0.0;
  double gamma_over_g = 0.0;
  double omega_over_g = 0.0;
  std::optional<double> delta_over_g;  // empty for the resonant model
  double t_gate_g = 0.0;
  double fidelity = 0.0;
  double success_probability = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "model,kappa_over_g,gamma_over_g,omega_over_g,delta_over_g,t_gate_g,fidelity,success_probability";

/// One row per grid point, κ outer and γ inner, whatever the thread count.
/// `threads` = 0 picks std::thread::hardware_concurrency().
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads = 0);

/// 12 significant digits.
std::string format_number(double value);

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Throws std::runtime_error if the file cannot be written.
void write_csv_file(const std::filesystem::path& path, std::span<const SweepRow> rows);
/// Throws std::runtime_error on a header mismatch or malformed row.
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace fredkin
