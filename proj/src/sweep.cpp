#include "fredkin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fredkin {

double Grid::at(int i) const {
  if (count == 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepConfig::validate() const {
  auto check_grid = [](const Grid& grid, const char* name) {
    const std::string n(name);
    if (grid.count < 2) throw std::invalid_argument(n + " grid needs at least 2 points");
    if (!(grid.min <= grid.max)) throw std::invalid_argument(n + " grid has min > max");
    if (grid.min < 0.0) throw std::invalid_argument(n + " grid must be non-negative");
  };
  check_grid(kappa, "kappa");
  check_grid(gamma, "gamma");
  if (!(omega_over_g > 0.0)) throw std::invalid_argument("omega_over_g must be positive");
  params_at(kappa.min, gamma.min).validate();
}

ModelParams SweepConfig::params_at(double kappa_over_g, double gamma_over_g) const {
  ModelParams p = model == ModelKind::resonant
                      ? ModelParams::resonant(omega_over_g, kappa_over_g, gamma_over_g)
                      : ModelParams::detuned(omega_over_g, delta_over_g, kappa_over_g, gamma_over_g);
  p.n_max = n_max;
  p.dissipator = dissipator;
  return p;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();
  const auto total = static_cast<std::size_t>(config.kappa.count) *
                     static_cast<std::size_t>(config.gamma.count);
  std::vector<SweepRow> rows(total);
  RunOptions options;
  options.probe = config.probe;

  auto compute = [&](std::size_t index) {
    const int ik = static_cast<int>(index / static_cast<std::size_t>(config.gamma.count));
    const int ig = static_cast<int>(index % static_cast<std::size_t>(config.gamma.count));
    SweepRow& row = rows[index];
    row.model = config.model;
    row.kappa_over_g = config.kappa.at(ik);
    row.gamma_over_g = config.gamma.at(ig);
    row.omega_over_g = config.omega_over_g;
    if (config.model == ModelKind::detuned) row.delta_over_g = config.delta_over_g;
    const GateRunResult r = fidelity_run(config.params_at(row.kappa_over_g, row.gamma_over_g), options);
    row.t_gate_g = r.t_gate;
    row.fidelity = r.fidelity;
    row.success_probability = r.success_probability;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) compute(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) {
          try {
            compute(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = total;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << to_string(r.model) << ',' << format_number(r.kappa_over_g) << ','
        << format_number(r.gamma_over_g) << ',' << format_number(r.omega_over_g) << ','
        << (r.delta_over_g ? format_number(*r.delta_over_g) : std::string()) << ','
        << format_number(r.t_gate_g) << ',' << format_number(r.fidelity) << ','
        << format_number(r.success_probability) << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, std::span<const SweepRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

namespace {

double parse_double(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("CSV header does not match the sweep schema");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 8) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 8 fields");
    }
    SweepRow r;
    r.model = parse_model_kind(fields[0]);
    r.kappa_over_g = parse_double(fields[1], line_no);
    r.gamma_over_g = parse_double(fields[2], line_no);
    r.omega_over_g = parse_double(fields[3], line_no);
    if (!fields[4].empty()) r.delta_over_g = parse_double(fields[4], line_no);
    r.t_gate_g = parse_double(fields[5], line_no);
    r.fidelity = parse_double(fields[6], line_no);
    r.success_probability = parse_double(fields[7], line_no);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace fredkin
