#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "fredkin/config.hpp"
#include "fredkin/reports.hpp"
#include "fredkin/sweep.hpp"

using namespace fredkin;
namespace fs = std::filesystem;

namespace {

std::string config_error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

SweepConfig small_sweep(ModelKind kind) {
  SweepConfig c;
  c.model = kind;
  c.kappa = {0.0, 0.1, 3};
  c.gamma = {0.0, 0.1, 3};
  return c;
}

std::string csv_of(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fredkin_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch("stdout.txt");
  const fs::path err = scratch("stderr.txt");
  const std::string cmd = std::string("\"") + FREDKIN_CLI_PATH + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

// ---- config ----------------------------------------------------------------

TEST(Config, ParsesEverySection) {
  const RunConfig c = parse_config(R"(
; comment
[model]
kind = detuned
omega_over_g = 0.02
delta_over_g = 0.4     ; inline comment
kappa_over_g = 0.01
gamma_over_g = 0.02
n_max = 2
dissipator = literal
probe = symmetric

[sweep]
kappa_min = 0
kappa_max = 0.05
kappa_count = 6
gamma_min = 0.01
gamma_max = 0.02
gamma_count = 3
output = out.csv

[truth-table]
floor = 0.95

[physical]
g_mhz = 500
kappa_mhz = 1
gamma_mhz = 2

[zeno-report]
degeneracy_tol = 1e-7

[analytic-compare]
samples = 20
)");
  EXPECT_EQ(c.model, ModelKind::detuned);
  EXPECT_DOUBLE_EQ(c.omega_over_g, 0.02);
  EXPECT_DOUBLE_EQ(c.delta_over_g, 0.4);
  EXPECT_EQ(c.n_max, 2);
  EXPECT_EQ(c.dissipator, DissipatorConvention::literal);
  EXPECT_EQ(c.probe, ProbeState::symmetric);
  EXPECT_EQ(c.kappa_grid.count, 6);
  EXPECT_DOUBLE_EQ(c.gamma_grid.min, 0.01);
  EXPECT_EQ(c.output, "out.csv");
  EXPECT_DOUBLE_EQ(c.truth_table_floor, 0.95);
  EXPECT_DOUBLE_EQ(c.physical.g_mhz, 500.0);
  EXPECT_DOUBLE_EQ(c.degeneracy_tol, 1e-7);
  EXPECT_EQ(c.samples, 20);

  const ModelParams p = c.params();
  EXPECT_EQ(p.model, ModelKind::detuned);
  EXPECT_EQ(p.n_max, 2);
  EXPECT_DOUBLE_EQ(p.kappa, 0.01);
}

TEST(Config, EmptyTextGivesDefaults) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c.model, ModelKind::resonant);
  EXPECT_DOUBLE_EQ(c.omega_over_g, 0.03);
  EXPECT_EQ(c.kappa_grid.count, 21);
  EXPECT_DOUBLE_EQ(c.gamma_grid.max, 0.1);
}

TEST(Config, ErrorsNameTheOffendingKey) {
  EXPECT_EQ(config_error_key("[model]\nomega_over_g = fast\n"), "model.omega_over_g");
  EXPECT_EQ(config_error_key("[model]\nkind = dispersive\n"), "model.kind");
  EXPECT_EQ(config_error_key("[model]\nn_max = 5\n"), "model.n_max");
  EXPECT_EQ(config_error_key("[model]\nkappa_over_g = -0.1\n"), "model.kappa_over_g");
  EXPECT_EQ(config_error_key("[model]\nomega = 0.1\n"), "model.omega");
  EXPECT_EQ(config_error_key("[sweep]\nkappa_count = 1\n"), "sweep.kappa_count");
  EXPECT_EQ(config_error_key("[sweep]\ngamma_min = 0.2\n"), "sweep.gamma_min");
  EXPECT_EQ(config_error_key("[physical]\ng_mhz = 0\n"), "physical.g_mhz");
  EXPECT_EQ(config_error_key("[plot]\nx = 1\n"), "plot");
  EXPECT_EQ(config_error_key("stray = 1\n"), "stray");
  EXPECT_EQ(config_error_key("[model]\nkind=detuned\ndelta_over_g = 0\n"), "model.delta_over_g");
}

TEST(Config, ShippedExampleMatchesDefaults) {
  const RunConfig c = load_config(FREDKIN_EXAMPLE_CONFIG);
  const RunConfig d;
  EXPECT_EQ(c.model, d.model);
  EXPECT_EQ(c.omega_over_g, d.omega_over_g);
  EXPECT_EQ(c.delta_over_g, d.delta_over_g);
  EXPECT_EQ(c.dissipator, d.dissipator);
  EXPECT_EQ(c.probe, d.probe);
  EXPECT_EQ(c.kappa_grid.count, d.kappa_grid.count);
  EXPECT_EQ(c.gamma_grid.max, d.gamma_grid.max);
  EXPECT_EQ(c.output, "");
  EXPECT_EQ(c.physical.gamma_mhz, d.physical.gamma_mhz);
  EXPECT_EQ(c.samples, d.samples);
}

TEST(Config, MissingFileIsReported) {
  try {
    load_config(scratch("does-not-exist.ini"));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "file");
  }
}

// ---- sweep -----------------------------------------------------------------

TEST(Sweep, GridEndpointsAreExact) {
  const Grid g{0.0, 0.1, 21};
  EXPECT_EQ(g.at(0), 0.0);
  EXPECT_EQ(g.at(20), 0.1);
  EXPECT_NEAR(g.at(10), 0.05, 1e-17);
}

TEST(Sweep, RowsAreKappaOuterGammaInner) {
  const auto rows = run_sweep(small_sweep(ModelKind::resonant), 3);
  ASSERT_EQ(rows.size(), 9u);
  for (int i = 0; i < 9; ++i) {
    EXPECT_DOUBLE_EQ(rows[i].kappa_over_g, 0.05 * (i / 3));
    EXPECT_DOUBLE_EQ(rows[i].gamma_over_g, 0.05 * (i % 3));
    EXPECT_FALSE(rows[i].delta_over_g.has_value());
  }
}

TEST(Sweep, CornerRowsCarryTheNoisyGateValues) {
  const auto res = run_sweep(small_sweep(ModelKind::resonant), 1);
  EXPECT_NEAR(res.back().fidelity, 0.7778, 0.005);
  EXPECT_NEAR(res.back().success_probability, 0.8866, 0.005);
  EXPECT_NEAR(res.front().success_probability, 1.0, 1e-6);

  const auto det = run_sweep(small_sweep(ModelKind::detuned), 1);
  EXPECT_NEAR(det.back().fidelity, 0.9783, 0.005);
  EXPECT_NEAR(det.back().success_probability, 0.8460, 0.005);
  ASSERT_TRUE(det.back().delta_over_g.has_value());
  EXPECT_DOUBLE_EQ(*det.back().delta_over_g, 0.3);
}

TEST(Sweep, OutputIsIndependentOfThreadCount) {
  const SweepConfig c = small_sweep(ModelKind::detuned);
  const std::string one = csv_of(run_sweep(c, 1));
  EXPECT_EQ(one, csv_of(run_sweep(c, 4)));
  EXPECT_EQ(one, csv_of(run_sweep(c, 1)));
}

TEST(Sweep, CsvRoundTripsAtPrintedPrecision) {
  const auto rows = run_sweep(small_sweep(ModelKind::detuned), 2);
  std::stringstream ss(csv_of(rows));
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, kCsvHeader);
  ss.seekg(0);
  const auto back = read_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)); };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].model, rows[i].model);
    EXPECT_TRUE(close(back[i].kappa_over_g, rows[i].kappa_over_g));
    EXPECT_TRUE(close(back[i].gamma_over_g, rows[i].gamma_over_g));
    EXPECT_TRUE(close(back[i].omega_over_g, rows[i].omega_over_g));
    EXPECT_TRUE(close(*back[i].delta_over_g, *rows[i].delta_over_g));
    EXPECT_TRUE(close(back[i].t_gate_g, rows[i].t_gate_g));
    EXPECT_TRUE(close(back[i].fidelity, rows[i].fidelity));
    EXPECT_TRUE(close(back[i].success_probability, rows[i].success_probability));
    EXPECT_EQ(format_number(back[i].fidelity), format_number(rows[i].fidelity));
  }
}

TEST(Sweep, ResonantRowsLeaveDeltaEmpty) {
  SweepConfig c = small_sweep(ModelKind::resonant);
  c.kappa.count = c.gamma.count = 2;
  const std::string csv = csv_of(run_sweep(c, 1));
  EXPECT_NE(csv.find("resonant,0,0,0.03,,"), std::string::npos);
  std::stringstream ss(csv);
  EXPECT_FALSE(read_csv(ss).front().delta_over_g.has_value());
}

TEST(Sweep, RejectsBadInput) {
  SweepConfig c = small_sweep(ModelKind::resonant);
  c.kappa.count = 1;
  EXPECT_THROW(run_sweep(c), std::invalid_argument);
  c = small_sweep(ModelKind::resonant);
  c.gamma.min = 0.2;
  EXPECT_THROW(run_sweep(c), std::invalid_argument);

  std::stringstream bad_header("model,kappa\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::stringstream short_row(std::string(kCsvHeader) + "\nresonant,0,0\n");
  EXPECT_THROW(read_csv(short_row), std::runtime_error);
  EXPECT_THROW(write_csv_file("/nonexistent-dir/out.csv", {}), std::runtime_error);
}

// ---- reports ---------------------------------------------------------------

TEST(Reports, PhysicalRunWithoutLossesMatchesClosedSweepPoint) {
  RunConfig c;
  c.physical.kappa_mhz = 0.0;
  c.physical.gamma_mhz = 0.0;
  const auto results = physical_run(c);
  ASSERT_EQ(results.size(), 2u);

  SweepConfig s = small_sweep(ModelKind::resonant);
  s.kappa = {0.0, 0.0, 2};
  s.gamma = {0.0, 0.0, 2};
  EXPECT_DOUBLE_EQ(results[0].fidelity, run_sweep(s, 1).front().fidelity);
  s.model = ModelKind::detuned;
  EXPECT_DOUBLE_EQ(results[1].fidelity, run_sweep(s, 1).front().fidelity);
}

TEST(Reports, PhysicalUnitsConversion) {
  EXPECT_NEAR(natural_time_to_us(2.0 * std::numbers::pi * 750.0, 750.0), 1.0, 1e-15);
  RunConfig c;
  c.physical.g_mhz = -1.0;
  EXPECT_THROW(physical_run(c), std::invalid_argument);
}

TEST(Reports, ZenoReportGroupsAndVerdicts) {
  const auto reports = zeno_report(ModelParams::resonant(0.03), 1e-6);
  ASSERT_EQ(reports.size(), 2u);
  std::multiset<std::size_t> swap, aligned;
  for (const auto& g : reports[0].decomposition.groups) swap.insert(g.multiplicity());
  for (const auto& g : reports[1].decomposition.groups) aligned.insert(g.multiplicity());
  EXPECT_EQ(swap, (std::multiset<std::size_t>{4, 2, 2, 1, 1, 2, 2}));
  EXPECT_EQ(aligned, (std::multiset<std::size_t>{2, 2, 2, 1, 1}));
  for (const auto& r : reports) {
    for (const auto& c : r.span_checks) EXPECT_TRUE(c.inside) << r.name << ": " << c.name;
  }

  std::ostringstream rows;
  write_zeno_rows(rows, reports, 1.0);
  EXPECT_NE(rows.str().find("swap,0,4\n"), std::string::npos);
  EXPECT_NE(rows.str().find("aligned,-2,1\n"), std::string::npos);
}

TEST(Reports, AnalyticComparisonSeparatesZenoErrorFromReductionError) {
  const AnalyticComparison c = analytic_compare(ModelParams::resonant(0.03), 50);
  EXPECT_LT(c.max_effective_deviation, 1e-10);
  EXPECT_GT(c.max_full_deviation, 1e-3);
  EXPECT_LT(c.max_full_deviation, 0.1);
  EXPECT_NEAR(c.closed_form_final_overlap, 1.0, 1e-12);
  EXPECT_THROW(analytic_compare(ModelParams::resonant(0.03), 1), std::invalid_argument);
}

TEST(Reports, TruthTableVerdict) {
  const auto rows = truth_table_check(ModelParams::resonant(0.03));
  std::ostringstream out;
  EXPECT_TRUE(print_truth_table(out, rows, 0.99));
  EXPECT_FALSE(print_truth_table(out, rows, 0.9999));
}

// ---- binary ----------------------------------------------------------------

TEST(Binary, TruthTableExitCodes) {
  const RunResult ok = run_cli("truth-table");
  EXPECT_EQ(ok.status, 0) << ok.err;
  EXPECT_NE(ok.out.find("|g0,gL,gR;0,0>"), std::string::npos);

  EXPECT_EQ(run_cli("truth-table --floor 0.9999").status, 2);
  const fs::path cfg = scratch("floor.ini");
  write_file(cfg, "[truth-table]\nfloor = 0.9999\n");
  EXPECT_EQ(run_cli("--config \"" + cfg.string() + "\" truth-table").status, 2);
}

TEST(Binary, MalformedConfigExitsWithTheKey) {
  const fs::path cfg = scratch("bad.ini");
  write_file(cfg, "[model]\nomega_over_g = 0.03\ngamma_over_g = lots\n");
  const RunResult r = run_cli("--config \"" + cfg.string() + "\" truth-table");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("model.gamma_over_g"), std::string::npos) << r.err;
}

TEST(Binary, ValidationFailures) {
  EXPECT_EQ(run_cli("--nmax 7 truth-table").status, 1);
  EXPECT_EQ(run_cli("--model diagonal truth-table").status, 1);
  EXPECT_EQ(run_cli("--dissipator other sweep").status, 1);
  EXPECT_EQ(run_cli("nonsense").status, 1);
  EXPECT_EQ(run_cli("--output /nonexistent-dir/x.csv sweep").status, 1);
}

TEST(Binary, SweepWritesDeterministicCsv) {
  const fs::path cfg = scratch("sweep.ini");
  write_file(cfg, "[sweep]\nkappa_count = 3\ngamma_count = 3\n");
  const fs::path a = scratch("a.csv");
  const fs::path b = scratch("b.csv");
  ASSERT_EQ(run_cli("--config \"" + cfg.string() + "\" --model detuned --output \"" + a.string() + "\" sweep").status, 0);
  ASSERT_EQ(run_cli("--config \"" + cfg.string() + "\" --model detuned --threads 2 --output \"" + b.string() + "\" sweep").status, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(sa.str().substr(0, kCsvHeader.size()), kCsvHeader);

  std::stringstream parse(sa.str());
  EXPECT_EQ(read_csv(parse).size(), 9u);
}

TEST(Binary, ReportSubcommandsRun) {
  for (const char* sub : {"physical", "zeno-report", "analytic-compare", "--model detuned analytic-compare",
                          "--nmax 2 --dissipator literal physical"}) {
    const RunResult r = run_cli(sub);
    EXPECT_EQ(r.status, 0) << sub << ": " << r.err;
    EXPECT_FALSE(r.out.empty()) << sub;
  }
}
