#include "fredkin/propagator.hpp"

#include <array>
#include <cmath>
#include <string>

namespace fredkin {

TrajectoryExtinguished::TrajectoryExtinguished(double survival)
    : std::runtime_error("trajectory extinguished: survival " + std::to_string(survival) +
                         " below 1e-12"),
      survival_(survival) {}

SpectralPropagator::SpectralPropagator(const Eigen::MatrixXcd& h) {
  if (hermiticity_defect(h) > 1e-12) {
    throw std::invalid_argument("evolve_hermitian: non-Hermitian generator (use evolve_conditional)");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

StateVector SpectralPropagator::evolve(const StateVector& psi0, double t) const {
  if (psi0.size() != eigenvectors_.rows()) throw std::invalid_argument("state dimension mismatch");
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * t);
  }
  return eigenvectors_ * coeffs;
}

Eigen::MatrixXcd SpectralPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

StateVector evolve_hermitian(const Operator& h, const StateVector& psi0, double t) {
  return SpectralPropagator(h).evolve(psi0, t);
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  static constexpr std::array<double, 14> b{64764752532480000.0,
                                            32382376266240000.0,
                                            7771770303897600.0,
                                            1187353796428800.0,
                                            129060195264000.0,
                                            10559470521600.0,
                                            670442572800.0,
                                            33522128640.0,
                                            1323241920.0,
                                            40840800.0,
                                            960960.0,
                                            16380.0,
                                            182.0,
                                            1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm1)) throw std::invalid_argument("expm: non-finite entries");
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

  const Eigen::MatrixXcd as = a / std::ldexp(1.0, squarings);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd a2 = as * as;
  const Eigen::MatrixXcd a4 = a2 * a2;
  const Eigen::MatrixXcd a6 = a4 * a2;

  const Eigen::MatrixXcd u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const Eigen::MatrixXcd u = as * (u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const Eigen::MatrixXcd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                             b[2] * a2 + b[0] * id;

  Eigen::MatrixXcd r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

double dissipation_defect(const Eigen::MatrixXcd& h) {
  const Complex i_unit(0.0, 1.0);
  const Eigen::MatrixXcd gamma = 0.5 * i_unit * (h - h.adjoint());
  const Eigen::MatrixXcd hermitian_gamma = 0.5 * (gamma + gamma.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_gamma, Eigen::EigenvaluesOnly);
  return -solver.eigenvalues().minCoeff();
}

PropagationResult evolve_conditional(const Eigen::MatrixXcd& h_cond, const StateVector& psi0,
                                     double t) {
  if (h_cond.rows() != psi0.size()) throw std::invalid_argument("state dimension mismatch");
  if (dissipation_defect(h_cond) > 1e-12) {
    throw std::invalid_argument("evolve_conditional: generator amplifies some state");
  }
  const Complex i_unit(0.0, 1.0);
  const StateVector raw = expm(-i_unit * t * h_cond) * psi0;
  PropagationResult out;
  out.raw_norm_sq = raw.squaredNorm();
  out.survival = out.raw_norm_sq;
  if (out.survival < 1e-12) throw TrajectoryExtinguished(out.survival);
  out.state = raw / std::sqrt(out.raw_norm_sq);
  return out;
}

PropagationResult evolve_conditional(const Operator& h_cond, const StateVector& psi0, double t) {
  return evolve_conditional(h_cond.matrix, psi0, t);
}

}  // namespace fredkin
