#include "fredkin/reports.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fredkin/catalogue.hpp"
#include "fredkin/propagator.hpp"

namespace fredkin {
namespace {

// Zero-group eigenvalues come out as ±1e-16; show them as 0.
double shown_eigenvalue(const ZenoGroup& grp, const ZenoDecomposition& d, double g) {
  return std::abs(grp.eigenvalue) <= d.degeneracy_tolerance ? 0.0 : grp.eigenvalue / g;
}

std::string fixed4(double v) {
  std::ostringstream ss;
  ss << std::setprecision(4) << v;
  return ss.str();
}

}  // namespace

double natural_time_to_us(double t_natural, double g_mhz) {
  // g = 2π·g_mhz·10⁶ rad/s, so t[μs] = t_natural / (2π·g_mhz).
  return t_natural / (2.0 * std::numbers::pi * g_mhz);
}

std::vector<PhysicalResult> physical_run(const RunConfig& config) {
  if (!(config.physical.g_mhz > 0.0)) throw std::invalid_argument("g must be positive");
  RunConfig scaled = config;
  scaled.kappa_over_g = config.physical.kappa_mhz / config.physical.g_mhz;
  scaled.gamma_over_g = config.physical.gamma_mhz / config.physical.g_mhz;
  RunOptions options;
  options.probe = config.probe;

  std::vector<PhysicalResult> out;
  for (ModelKind kind : {ModelKind::resonant, ModelKind::detuned}) {
    const GateRunResult r = fidelity_run(scaled.params(kind), options);
    PhysicalResult row;
    row.model = kind;
    row.kappa_over_g = scaled.kappa_over_g;
    row.gamma_over_g = scaled.gamma_over_g;
    row.fidelity = r.fidelity;
    row.success_probability = r.success_probability;
    row.t_gate_us = natural_time_to_us(r.t_gate, config.physical.g_mhz);
    out.push_back(row);
  }
  return out;
}

void print_physical(std::ostream& out, const PhysicalRates& rates,
                    const std::vector<PhysicalResult>& results) {
  out << "g = 2pi x " << rates.g_mhz << " MHz, kappa = 2pi x " << rates.kappa_mhz
      << " MHz, gamma = 2pi x " << rates.gamma_mhz << " MHz\n";
  for (const PhysicalResult& r : results) {
    out << std::left << std::setw(9) << to_string(r.model) << "  kappa/g=" << fixed4(r.kappa_over_g)
        << "  gamma/g=" << fixed4(r.gamma_over_g) << "  F=" << fixed4(r.fidelity)
        << "  P=" << fixed4(r.success_probability) << "  t_gate=" << fixed4(r.t_gate_us) << " us\n";
  }
}

std::vector<ZenoSubspaceReport> zeno_report(const ModelParams& p, double degeneracy_tol) {
  ModelParams resonant = p;
  resonant.model = ModelKind::resonant;
  const Operator total = build_total(resonant);
  const Eigen::MatrixXcd hc = build_cavity_coupling(resonant).matrix;

  std::vector<ZenoSubspaceReport> out;
  auto add = [&](std::string name, const BasisState& seed,
                 std::vector<std::pair<std::string, StateVector>> candidates) {
    ClosedSubspace sub = reachable_subspace(total, seed);
    ZenoDecomposition d = zeno_decompose(sub.restrict(hc), resonant.g, degeneracy_tol);
    std::vector<NamedSpanCheck> checks;
    for (auto& [label_text, vec] : candidates) {
      const Eigen::VectorXcd local = sub.restrict(vec);
      const SpanCheck c = zero_subspace_span_check(d, std::span(&local, 1));
      checks.push_back({label_text, c.max_residual, c.inside});
    }
    out.push_back({std::move(name), seed, std::move(sub), std::move(d), std::move(checks)});
  };

  const int n = resonant.n_max;
  add("swap", catalogue::swap_input(),
      {{"input |g0,gL,gR;0,0>", basis_vector(catalogue::swap_input(), n)},
       {"output |g0,gR,gL;0,0>", basis_vector(catalogue::swap_output(), n)},
       {"photonic dark state", catalogue::swap_dark_photonic(n)},
       {"bright excited state", catalogue::swap_bright_excited(n)}});
  add("aligned", catalogue::aligned_sector()[0],
      {{"input |g0,gL,gL;0,0>", basis_vector(catalogue::aligned_sector()[0], n)},
       {"photonic dark state", catalogue::aligned_dark_photonic(n)}});
  return out;
}

void print_zeno_report(std::ostream& out, const std::vector<ZenoSubspaceReport>& reports,
                       double g) {
  for (const ZenoSubspaceReport& r : reports) {
    out << "subspace " << r.name << " (seed " << label(r.seed) << "), dimension "
        << r.subspace.dim() << ", " << r.decomposition.groups.size() << " Zeno groups\n";
    out << "  eigenvalue/g  multiplicity\n";
    for (const ZenoGroup& grp : r.decomposition.groups) {
      out << "  " << std::setw(12) << fixed4(shown_eigenvalue(grp, r.decomposition, g)) << "  " << grp.multiplicity() << '\n';
    }
    for (const NamedSpanCheck& c : r.span_checks) {
      out << "  zero-group span: " << c.name << " -> " << (c.inside ? "true" : "false")
          << " (residual " << std::scientific << std::setprecision(2) << c.residual
          << std::defaultfloat << ")\n";
    }
  }
}

void write_zeno_rows(std::ostream& out, const std::vector<ZenoSubspaceReport>& reports, double g) {
  out << "subspace,eigenvalue_over_g,multiplicity\n";
  for (const ZenoSubspaceReport& r : reports) {
    for (const ZenoGroup& grp : r.decomposition.groups) {
      out << r.name << ',' << format_number(shown_eigenvalue(grp, r.decomposition, g)) << ',' << grp.multiplicity() << '\n';
    }
  }
}

AnalyticComparison analytic_compare(const ModelParams& p, int samples) {
  if (samples < 2) throw std::invalid_argument("analytic_compare: need at least 2 samples");
  AnalyticComparison c;
  c.model = p.model;
  c.samples = samples;
  c.t_gate = gate_time(p);

  const Operator total = build_total(p);
  const ClosedSubspace sub = reachable_subspace(total, catalogue::swap_input());
  const SpectralPropagator full(sub.restrict(total.matrix));
  const EffectiveModel eff =
      p.model == ModelKind::resonant ? effective_resonant(sub, p) : effective_detuned(sub, p);
  const SpectralPropagator reduced(eff.h_eff);

  const StateVector phi1 = basis_vector(catalogue::swap_input(), p.n_max);
  const Eigen::VectorXcd phi1_local = sub.restrict(phi1);
  const Eigen::VectorXcd phi1_eff = eff.lower(phi1);
  const auto out_index = static_cast<Eigen::Index>(index_of(catalogue::swap_output(), p.n_max));

  for (int k = 0; k < samples; ++k) {
    const double t = c.t_gate * static_cast<double>(k) / static_cast<double>(samples - 1);
    const StateVector closed = analytic_state(p.model, t, p);
    const StateVector by_full = sub.embed(full.evolve(phi1_local, t));
    const StateVector by_eff = eff.lift(reduced.evolve(phi1_eff, t));
    c.max_full_deviation = std::max(c.max_full_deviation, (by_full - closed).norm());
    c.max_effective_deviation = std::max(c.max_effective_deviation, (by_eff - closed).norm());
    if (k == samples - 1) {
      c.closed_form_final_overlap = std::norm(closed(out_index));
      c.full_final_overlap = std::norm(by_full(out_index));
    }
  }
  return c;
}

void print_analytic(std::ostream& out, const AnalyticComparison& c) {
  out << "model " << to_string(c.model) << ", " << c.samples << " samples over [0, "
      << fixed4(c.t_gate) << "/g]\n"
      << "  max |full - closed form|      = " << std::scientific << std::setprecision(3)
      << c.max_full_deviation << '\n'
      << "  max |effective - closed form| = " << c.max_effective_deviation << std::defaultfloat
      << '\n'
      << "  final |<g0,gR,gL|psi>|^2: closed form " << fixed4(c.closed_form_final_overlap)
      << ", full " << fixed4(c.full_final_overlap) << '\n';
}

bool print_truth_table(std::ostream& out, const std::vector<TruthTableRow>& rows, double floor) {
  bool ok = true;
  out << std::left << std::setw(18) << "input" << std::setw(18) << "target" << std::setw(12)
      << "overlap^2" << "leakage\n";
  for (const TruthTableRow& r : rows) {
    const bool pass = r.overlap_sq >= floor;
    ok = ok && pass;
    out << std::left << std::setw(18) << label(r.input) << std::setw(18) << label(r.target)
        << std::setw(12) << fixed4(r.overlap_sq) << std::scientific << std::setprecision(2)
        << r.leakage << std::defaultfloat << (pass ? "" : "  BELOW FLOOR") << '\n';
  }
  out << (ok ? "all rows" : "not all rows") << " reach floor " << floor << '\n';
  return ok;
}

}  // namespace fredkin
