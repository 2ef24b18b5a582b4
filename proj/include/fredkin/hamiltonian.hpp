#pragma once

#include <Eigen/Dense>

#include "fredkin/hilbert.hpp"
#include "fredkin/params.hpp"

namespace fredkin {

// Dense operator on the truncated product space. `hermitian` is a promise
// checked on construction by the builders below (‖M − M†‖_max ≤ 1e−12).
struct Operator {
  Eigen::MatrixXcd matrix;
  bool hermitian = true;

  Eigen::Index dim() const { return matrix.rows(); }
};

double hermiticity_defect(const Eigen::MatrixXcd& m);

/// Σ_k g (a_L |e0⟩_k⟨gL| + a_R |e0⟩_k⟨gR|) + H.c., uniform coupling g.
Operator build_cavity_coupling(const ModelParams& p);

/// Ω (|e0⟩_1⟨g0| + H.c.) on atom 1 only.
Operator build_laser(const ModelParams& p);

/// Δ · (number of atoms in e0). Throws std::logic_error for the resonant model.
Operator build_detuning(const ModelParams& p);

/// Cavity coupling + laser (+ detuning for the detuned model).
Operator build_total(const ModelParams& p);

/// Non-Hermitian generator of the no-jump branch: build_total − i·D with D the
/// diagonal decay operator selected by p.dissipator.
Operator build_conditional(const ModelParams& p);

/// Diagonal decay operator D (real, non-negative) used by build_conditional.
Eigen::VectorXd decay_rates(const ModelParams& p);

/// N = Σ_k |e0⟩_k⟨e0| + a_L†a_L + a_R†a_R.
Operator excitation_number_operator(int n_max);

}  // namespace fredkin
