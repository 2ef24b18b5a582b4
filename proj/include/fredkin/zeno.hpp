#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fredkin/hamiltonian.hpp"
#include "fredkin/hilbert.hpp"
#include "fredkin/params.hpp"

namespace fredkin {

// Set of basis states closed under some operator, in first-reached order.
class ClosedSubspace {
 public:
  ClosedSubspace(std::vector<std::size_t> members, int n_max);

  std::size_t dim() const { return members_.size(); }
  int n_max() const { return n_max_; }
  const std::vector<std::size_t>& members() const { return members_; }
  BasisState member_state(std::size_t local) const { return state_at(members_[local], n_max_); }
  bool contains(const BasisState& s) const { return local_index(s).has_value(); }
  std::optional<std::size_t> local_index(const BasisState& s) const;

  /// Rows and columns of `full` belonging to the members.
  Eigen::MatrixXcd restrict(const Eigen::MatrixXcd& full) const;
  Eigen::VectorXcd restrict(const StateVector& full) const;
  /// Subspace coordinates back to the full basis (zeros elsewhere).
  StateVector embed(const Eigen::VectorXcd& local) const;

  /// Largest |H_ij| with i outside and j inside the subspace.
  double leakage(const Eigen::MatrixXcd& full) const;

 private:
  std::vector<std::size_t> members_;
  int n_max_;
};

/// Breadth-first closure of the seeds under matrix elements with |H_ij| > tol.
ClosedSubspace reachable_subspace(const Operator& h, const BasisState& seed, double tol = 1e-12);
ClosedSubspace reachable_subspace(const Operator& h, std::span<const std::size_t> seed_indices,
                                  double tol = 1e-12);

struct ZenoGroup {
  double eigenvalue = 0.0;
  Eigen::MatrixXcd basis;  // orthonormal columns, subspace coordinates

  std::size_t multiplicity() const { return static_cast<std::size_t>(basis.cols()); }
  Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

// Eigenspaces of the restricted cavity coupling, grouped by eigenvalue and
// sorted ascending.
struct ZenoDecomposition {
  std::vector<ZenoGroup> groups;
  double degeneracy_tolerance = 0.0;  // absolute, already scaled by g

  std::size_t dim() const;
  /// Group whose eigenvalue is within the degeneracy tolerance of zero.
  const ZenoGroup* zero_group() const;
};

/// Throws std::invalid_argument if the input is not Hermitian to 1e−12.
/// `degeneracy_tol` is relative to g.
ZenoDecomposition zeno_decompose(const Eigen::MatrixXcd& hc_restricted, double g,
                                 double degeneracy_tol = 1e-6);

struct SpanCheck {
  bool inside = false;
  double max_residual = 0.0;
  std::vector<double> residuals;  // ‖(1 − P0)v‖ / ‖v‖ per candidate
};

/// Are all candidates (subspace coordinates) inside the zero-eigenvalue group?
/// Compares spans, never individual eigenvectors.
SpanCheck zero_subspace_span_check(const ZenoDecomposition& d,
                                   std::span<const Eigen::VectorXcd> candidates,
                                   double tol = 1e-8);

// Small Hermitian model living on a handful of full-space vectors.
struct EffectiveModel {
  Eigen::MatrixXcd h_eff;
  std::vector<std::string> labels;
  std::vector<StateVector> embedding;

  /// Full-space state from effective-basis amplitudes.
  StateVector lift(const Eigen::VectorXcd& amplitudes) const;
  /// Effective-basis amplitudes of a full-space state.
  Eigen::VectorXcd lower(const StateVector& full) const;
};

/// P0 H_laser P0 on the zero group of the subspace, reduced to the drive-
/// active part: the vacuum ground states inside the subspace plus the bright
/// vector(s) the drive maps them to. Components of the zero group untouched
/// by the drive are checked to decouple and then dropped. Requires the
/// resonant model and a subspace whose zero group contains at least one
/// vacuum ground state; throws std::invalid_argument otherwise.
EffectiveModel effective_resonant(const ClosedSubspace& subspace, const ModelParams& p);

/// The detuned reduction: Zeno projection of drive + detuning on the zero
/// group followed by adiabatic elimination of the excited (Δ-shifted) part,
/// H_eff = K_gg − K_ge K_ee⁻¹ K_eg. Leaves a model on the vacuum ground states
/// only.
EffectiveModel effective_detuned(const ClosedSubspace& subspace, const ModelParams& p);

/// Closed-form state starting from |g0,gL,gR;0,0> (φ1):
///   resonant: (1+cos θ)/2 φ1 + (1−cos θ)/2 φ14 + i sin θ/√2 b,   θ = Ωt/√3
///   detuned:  (1+e^{iθ})/2 φ1 + (1−e^{iθ})/2 φ14,              θ = Ω²t/(3Δ)
/// with φ14 = |g0,gR,gL;0,0> and b the bright vector of effective_resonant.
StateVector analytic_state(ModelKind model, double t, const ModelParams& p);

}  // namespace fredkin
