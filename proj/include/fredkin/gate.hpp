#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "fredkin/hilbert.hpp"
#include "fredkin/params.hpp"

namespace fredkin {

// Three-qubit register: control on atom 1 (gR = |0>, g0 = |1>), targets on
// atoms 2 and 3 (gL, gR), both cavity modes empty.
std::array<BasisState, 8> computational_states();
bool in_computational_subspace(const BasisState& s);

/// Controlled swap on one basis state: control g0 exchanges atoms 2 and 3.
BasisState fredkin_target(const BasisState& s);

/// Linear extension of fredkin_target. Throws std::invalid_argument when more
/// than 1e−10 of amplitude sits outside the computational subspace.
StateVector ideal_fredkin(const StateVector& psi);

// Input register used for the noisy figure-of-merit runs.
//   symmetric: (g0+gR)⊗(gL+gR)⊗(gL+gR)/(2√2). Invariant under the ideal gate,
//              and inside the dark state of the swap sector.
//   phased:    (g0+gR)⊗(gL+gR)⊗(gL+i·gR)/(2√2). The swap acts nontrivially;
//              this register reproduces the reference noisy fidelity and
//              success-probability values (see README).
enum class ProbeState { phased, symmetric };

std::string_view to_string(ProbeState probe);
ProbeState parse_probe_state(std::string_view text);
StateVector probe_state(ProbeState probe, int n_max);

/// Resonant: √3·π/Ω. Detuned: 3Δπ/Ω².
double gate_time(const ModelParams& p);

struct TruthTableRow {
  BasisState input;
  BasisState target;
  double overlap_sq = 0.0;  // |⟨target|U(t_gate)|input⟩|²
  double leakage = 0.0;     // population outside the computational subspace
};

/// Closed-system truth table at t_gate. Requires κ = γ = 0.
std::vector<TruthTableRow> truth_table_check(const ModelParams& p);

struct GateRunResult {
  double fidelity = 0.0;
  double success_probability = 0.0;
  double t_gate = 0.0;
  ModelParams params;
};

struct RunOptions {
  ProbeState probe = ProbeState::phased;
  // Propagate only on the closure of the probe's support. The dissipator is
  // diagonal, so the closure is invariant and the result exact.
  bool restrict_to_reachable = true;
};

/// No-jump evolution of the probe register for t_gate under the conditional
/// Hamiltonian. success_probability is the surviving norm², fidelity the
/// overlap² of the renormalised state with ideal_fredkin(probe).
GateRunResult fidelity_run(const ModelParams& p, const RunOptions& options = {});

}  // namespace fredkin
