#include "fredkin/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fredkin/hamiltonian.hpp"
#include "fredkin/propagator.hpp"
#include "fredkin/zeno.hpp"

namespace fredkin {
namespace {

using L = AtomLevel;

constexpr double kOutsideTol = 1e-10;

bool is_target_level(AtomLevel a) { return a == L::gL || a == L::gR; }

}  // namespace

std::array<BasisState, 8> computational_states() {
  return {
      make_state(L::gR, L::gR, L::gR), make_state(L::gR, L::gR, L::gL),
      make_state(L::gR, L::gL, L::gR), make_state(L::gR, L::gL, L::gL),
      make_state(L::g0, L::gR, L::gR), make_state(L::g0, L::gR, L::gL),
      make_state(L::g0, L::gL, L::gR), make_state(L::g0, L::gL, L::gL),
  };
}

bool in_computational_subspace(const BasisState& s) {
  return (s.atoms[0] == L::gR || s.atoms[0] == L::g0) && is_target_level(s.atoms[1]) &&
         is_target_level(s.atoms[2]) && s.n_left == 0 && s.n_right == 0;
}

BasisState fredkin_target(const BasisState& s) {
  if (!in_computational_subspace(s)) {
    throw std::invalid_argument("fredkin_target: " + label(s) + " is not a register state");
  }
  BasisState t = s;
  if (s.atoms[0] == L::g0) std::swap(t.atoms[1], t.atoms[2]);
  return t;
}

StateVector ideal_fredkin(const StateVector& psi) {
  const int n_max = n_max_for_dimension(static_cast<std::size_t>(psi.size()));
  StateVector out = StateVector::Zero(psi.size());
  double outside = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const BasisState s = state_at(static_cast<std::size_t>(i), n_max);
    if (in_computational_subspace(s)) {
      out(static_cast<Eigen::Index>(index_of(fredkin_target(s), n_max))) += psi(i);
    } else {
      outside += std::norm(psi(i));
    }
  }
  if (std::sqrt(outside) > kOutsideTol) {
    throw std::invalid_argument("ideal_fredkin: state has support outside the register");
  }
  return out;
}

std::string_view to_string(ProbeState probe) {
  return probe == ProbeState::phased ? "phased" : "symmetric";
}

ProbeState parse_probe_state(std::string_view text) {
  if (text == "phased") return ProbeState::phased;
  if (text == "symmetric") return ProbeState::symmetric;
  throw std::invalid_argument("unknown probe state '" + std::string(text) +
                              "' (expected phased or symmetric)");
}

StateVector probe_state(ProbeState probe, int n_max) {
  check_n_max(n_max);
  const Complex i_unit(0.0, 1.0);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(basis_dimension(n_max)));
  const double norm = 1.0 / std::sqrt(8.0);
  for (const BasisState& s : computational_states()) {
    Complex amp = norm;
    if (probe == ProbeState::phased && s.atoms[2] == L::gR) amp *= i_unit;
    psi(static_cast<Eigen::Index>(index_of(s, n_max))) = amp;
  }
  return psi;
}

double gate_time(const ModelParams& p) {
  p.validate();
  if (!(p.omega > 0.0)) throw std::invalid_argument("gate_time: omega must be positive");
  if (p.model == ModelKind::resonant) return std::sqrt(3.0) * std::numbers::pi / p.omega;
  return 3.0 * p.delta * std::numbers::pi / (p.omega * p.omega);
}

std::vector<TruthTableRow> truth_table_check(const ModelParams& p) {
  if (p.kappa != 0.0 || p.gamma != 0.0) {
    throw std::invalid_argument("truth_table_check: requires kappa = gamma = 0");
  }
  const double t = gate_time(p);
  const SpectralPropagator propagator(build_total(p));
  std::vector<TruthTableRow> rows;
  for (const BasisState& in : computational_states()) {
    TruthTableRow row;
    row.input = in;
    row.target = fredkin_target(in);
    const StateVector out = propagator.evolve(basis_vector(in, p.n_max), t);
    row.overlap_sq = std::norm(out(static_cast<Eigen::Index>(index_of(row.target, p.n_max))));
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      if (!in_computational_subspace(state_at(static_cast<std::size_t>(i), p.n_max))) {
        row.leakage += std::norm(out(i));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

GateRunResult fidelity_run(const ModelParams& p, const RunOptions& options) {
  GateRunResult result;
  result.params = p;
  result.t_gate = gate_time(p);
  const Operator h_cond = build_conditional(p);
  const StateVector psi0 = probe_state(options.probe, p.n_max);
  const StateVector ideal = ideal_fredkin(psi0);

  StateVector final_state;
  if (options.restrict_to_reachable) {
    std::vector<std::size_t> seeds;
    for (Eigen::Index i = 0; i < psi0.size(); ++i) {
      if (psi0(i) != Complex(0.0)) seeds.push_back(static_cast<std::size_t>(i));
    }
    const ClosedSubspace sub = reachable_subspace(h_cond, seeds);
    const PropagationResult local =
        evolve_conditional(sub.restrict(h_cond.matrix), sub.restrict(psi0), result.t_gate);
    result.success_probability = local.survival;
    final_state = sub.embed(local.state);
  } else {
    const PropagationResult full = evolve_conditional(h_cond, psi0, result.t_gate);
    result.success_probability = full.survival;
    final_state = full.state;
  }
  result.fidelity = std::norm(ideal.dot(final_state));
  return result;
}

}  // namespace fredkin
