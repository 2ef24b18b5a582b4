// fredkin_cli: truth table, κ/γ sweeps, physical-units runs and Zeno
// diagnostics for the cavity Fredkin gate.
//
// Exit status: 0 success, 1 invalid input or config, 2 truth table below floor.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fredkin/config.hpp"
#include "fredkin/gate.hpp"
#include "fredkin/reports.hpp"
#include "fredkin/sweep.hpp"

namespace {

using namespace fredkin;

struct Overrides {
  std::string config_path;
  std::string output;
  std::optional<std::string> model;
  std::optional<std::string> dissipator;
  std::optional<std::string> probe;
  std::optional<int> n_max;
  std::optional<double> floor;
  unsigned threads = 0;
};

RunConfig resolve(const Overrides& o) {
  RunConfig config = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  auto wrap = [](const char* key, auto parse, const std::string& text) {
    try {
      return parse(text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  };
  if (o.model) config.model = wrap("--model", parse_model_kind, *o.model);
  if (o.dissipator) config.dissipator = wrap("--dissipator", parse_dissipator, *o.dissipator);
  if (o.probe) config.probe = wrap("--probe", parse_probe_state, *o.probe);
  if (o.n_max) config.n_max = *o.n_max;
  if (o.floor) config.truth_table_floor = *o.floor;
  if (!o.output.empty()) config.output = o.output;
  config.validate();
  return config;
}

// Writes to `path`, or standard output when empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_truth_table(const RunConfig& config) {
  const ModelParams p = config.params();
  const auto rows = truth_table_check(p);
  std::cout << "model " << to_string(p.model) << ", omega/g = " << p.omega << ", t_gate = "
            << gate_time(p) << "/g\n";
  return print_truth_table(std::cout, rows, config.truth_table_floor) ? 0 : 2;
}

int cmd_sweep(const RunConfig& config, unsigned threads) {
  const auto rows = run_sweep(config.sweep(), threads);
  if (config.output.empty()) {
    write_csv(std::cout, rows);
  } else {
    write_csv_file(config.output, rows);
    std::cerr << "wrote " << rows.size() << " rows to " << config.output << '\n';
  }
  return 0;
}

int cmd_physical(const RunConfig& config) {
  print_physical(std::cout, config.physical, physical_run(config));
  return 0;
}

int cmd_zeno_report(const RunConfig& config) {
  const ModelParams p = config.params();
  const auto reports = zeno_report(p, config.degeneracy_tol);
  print_zeno_report(std::cout, reports, p.g);
  if (!config.output.empty()) {
    with_output(config.output, [&](std::ostream& out) { write_zeno_rows(out, reports, p.g); });
  } else {
    std::cout << '\n';
    write_zeno_rows(std::cout, reports, p.g);
  }
  return 0;
}

int cmd_analytic_compare(const RunConfig& config) {
  print_analytic(std::cout, analytic_compare(config.params(), config.samples));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fredkin gate via quantum Zeno dynamics in a two-mode cavity"};
  app.require_subcommand(1);

  Overrides o;
  app.add_option("--config", o.config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--output", o.output, "Output path (sweep CSV or Zeno table)");
  app.add_option("--model", o.model, "resonant | detuned");
  app.add_option("--dissipator", o.dissipator, "conventional | literal");
  app.add_option("--probe", o.probe, "phased | symmetric");
  app.add_option("--nmax", o.n_max, "Photon cutoff per mode (1..3)");
  app.add_option("--floor", o.floor, "Truth-table overlap floor");
  app.add_option("--threads", o.threads, "Sweep worker threads (0 = hardware)");

  auto* truth = app.add_subcommand("truth-table", "Propagate the 8 computational states");
  auto* sweep = app.add_subcommand("sweep", "F and P over a kappa/gamma grid, as CSV");
  auto* physical = app.add_subcommand("physical", "Both models at rates given in MHz");
  auto* zeno = app.add_subcommand("zeno-report", "Zeno subspaces of the cavity coupling");
  auto* analytic = app.add_subcommand("analytic-compare", "Full and effective dynamics vs closed form");
  for (CLI::App* sub : {truth, sweep, physical, zeno, analytic}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const RunConfig config = resolve(o);
    if (*truth) return cmd_truth_table(config);
    if (*sweep) return cmd_sweep(config, o.threads);
    if (*physical) return cmd_physical(config);
    if (*zeno) return cmd_zeno_report(config);
    if (*analytic) return cmd_analytic_compare(config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
