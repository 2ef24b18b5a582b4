#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fredkin/config.hpp"
#include "fredkin/gate.hpp"
#include "fredkin/zeno.hpp"

namespace fredkin {

// ---- physical units -------------------------------------------------------

struct PhysicalResult {
  ModelKind model = ModelKind::resonant;
  double kappa_over_g = 0.0;
  double gamma_over_g = 0.0;
  double fidelity = 0.0;
  double success_probability = 0.0;
  double t_gate_us = 0.0;
};

/// Converts a time in units of 1/g to microseconds for g = 2π·g_mhz MHz.
double natural_time_to_us(double t_natural, double g_mhz);

/// Both models at the given rates; Ω and Δ are taken as ratios from `config`.
std::vector<PhysicalResult> physical_run(const RunConfig& config);
void print_physical(std::ostream& out, const PhysicalRates& rates,
                    const std::vector<PhysicalResult>& results);

// ---- Zeno structure -------------------------------------------------------

struct NamedSpanCheck {
  std::string name;
  double residual = 0.0;
  bool inside = false;
};

struct ZenoSubspaceReport {
  std::string name;
  BasisState seed;
  ClosedSubspace subspace;
  ZenoDecomposition decomposition;
  std::vector<NamedSpanCheck> span_checks;
};

/// Swap and aligned sectors of the resonant coupling with span checks of
/// their vacuum ground states and photonic/bright dark vectors.
std::vector<ZenoSubspaceReport> zeno_report(const ModelParams& p, double degeneracy_tol);
void print_zeno_report(std::ostream& out, const std::vector<ZenoSubspaceReport>& reports,
                       double g);
/// Machine-readable table: subspace,eigenvalue_over_g,multiplicity.
void write_zeno_rows(std::ostream& out, const std::vector<ZenoSubspaceReport>& reports, double g);

// ---- analytic comparison --------------------------------------------------

struct AnalyticComparison {
  ModelKind model = ModelKind::resonant;
  int samples = 0;
  double t_gate = 0.0;
  double max_full_deviation = 0.0;       // ‖ψ_full(t) − ψ_closed_form(t)‖
  double max_effective_deviation = 0.0;  // ‖ψ_eff(t) − ψ_closed_form(t)‖
  double closed_form_final_overlap = 0.0;  // |⟨φ14|ψ_closed_form(t_gate)⟩|²
  double full_final_overlap = 0.0;
};

/// Starting from |g0,gL,gR;0,0>, samples t ∈ [0, t_gate] evenly.
AnalyticComparison analytic_compare(const ModelParams& p, int samples);
void print_analytic(std::ostream& out, const AnalyticComparison& c);

// ---- truth table ----------------------------------------------------------

/// Returns true iff every row reaches the floor.
bool print_truth_table(std::ostream& out, const std::vector<TruthTableRow>& rows, double floor);

}  // namespace fredkin
