#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "fredkin/hamiltonian.hpp"
#include "fredkin/hilbert.hpp"

namespace fredkin {

class TrajectoryExtinguished : public std::runtime_error {
 public:
  explicit TrajectoryExtinguished(double survival);
  double survival() const { return survival_; }

 private:
  double survival_;
};

// exp(−iHt) for Hermitian H through one eigendecomposition, reusable for any
// number of times t.
class SpectralPropagator {
 public:
  /// Throws std::invalid_argument if ‖H − H†‖_max > 1e−12.
  explicit SpectralPropagator(const Eigen::MatrixXcd& h);
  explicit SpectralPropagator(const Operator& h) : SpectralPropagator(h.matrix) {}

  StateVector evolve(const StateVector& psi0, double t) const;
  Eigen::MatrixXcd unitary(double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

StateVector evolve_hermitian(const Operator& h, const StateVector& psi0, double t);

/// Matrix exponential by scaling and squaring with a degree-13 Padé
/// approximant; the number of squarings follows from ‖A‖₁.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// Largest eigenvalue of −Γ where Γ = i(H − H†)/2 is the decay operator.
/// Non-positive (up to rounding) for a valid no-jump generator.
double dissipation_defect(const Eigen::MatrixXcd& h);

struct PropagationResult {
  StateVector state;        // normalised
  double survival = 0.0;    // success probability ‖e^{−iHt}ψ0‖²
  double raw_norm_sq = 0.0;
};

/// e^{−iH t}ψ0 for a no-jump generator H. Throws std::invalid_argument if H
/// amplifies any state and TrajectoryExtinguished if survival < 1e−12.
PropagationResult evolve_conditional(const Operator& h_cond, const StateVector& psi0, double t);
PropagationResult evolve_conditional(const Eigen::MatrixXcd& h_cond, const StateVector& psi0, double t);

}  // namespace fredkin
