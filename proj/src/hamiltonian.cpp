#include "fredkin/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace fredkin {
namespace {

constexpr double kHermitianTol = 1e-12;

Eigen::MatrixXcd zeros(int n_max) {
  const auto dim = static_cast<Eigen::Index>(basis_dimension(n_max));
  return Eigen::MatrixXcd::Zero(dim, dim);
}

Operator checked_hermitian(Eigen::MatrixXcd m) {
  if (hermiticity_defect(m) > kHermitianTol) {
    throw std::logic_error("builder produced a non-Hermitian matrix");
  }
  return Operator{std::move(m), true};
}

// Adds value·(|to⟩⟨from| + |from⟩⟨to|).
void add_pair(Eigen::MatrixXcd& m, std::size_t to, std::size_t from, double value) {
  const auto i = static_cast<Eigen::Index>(to);
  const auto j = static_cast<Eigen::Index>(from);
  m(i, j) += value;
  m(j, i) += value;
}

}  // namespace

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Operator build_cavity_coupling(const ModelParams& p) {
  p.validate();
  Eigen::MatrixXcd m = zeros(p.n_max);
  for (const BasisState& s : enumerate_basis(p.n_max)) {
    const std::size_t from = index_of(s, p.n_max);
    for (int k = 0; k < kAtomCount; ++k) {
      // a_L |e0⟩_k⟨gL| absorbs a left photon, a_R |e0⟩_k⟨gR| a right one.
      if (s.atoms[k] == AtomLevel::gL && s.n_left > 0) {
        BasisState t = s;
        t.atoms[k] = AtomLevel::e0;
        t.n_left -= 1;
        add_pair(m, index_of(t, p.n_max), from, p.g * std::sqrt(static_cast<double>(s.n_left)));
      }
      if (s.atoms[k] == AtomLevel::gR && s.n_right > 0) {
        BasisState t = s;
        t.atoms[k] = AtomLevel::e0;
        t.n_right -= 1;
        add_pair(m, index_of(t, p.n_max), from, p.g * std::sqrt(static_cast<double>(s.n_right)));
      }
    }
  }
  return checked_hermitian(std::move(m));
}

Operator build_laser(const ModelParams& p) {
  p.validate();
  Eigen::MatrixXcd m = zeros(p.n_max);
  for (const BasisState& s : enumerate_basis(p.n_max)) {
    if (s.atoms[0] != AtomLevel::g0) continue;
    BasisState t = s;
    t.atoms[0] = AtomLevel::e0;
    add_pair(m, index_of(t, p.n_max), index_of(s, p.n_max), p.omega);
  }
  return checked_hermitian(std::move(m));
}

Operator build_detuning(const ModelParams& p) {
  if (p.model != ModelKind::detuned) {
    throw std::logic_error("detuning term requested for the resonant model");
  }
  p.validate();
  Eigen::MatrixXcd m = zeros(p.n_max);
  Eigen::Index i = 0;
  for (const BasisState& s : enumerate_basis(p.n_max)) {
    m(i, i) = p.delta * excited_atoms(s);
    ++i;
  }
  return Operator{std::move(m), true};
}

Operator build_total(const ModelParams& p) {
  Eigen::MatrixXcd m = build_cavity_coupling(p).matrix + build_laser(p).matrix;
  if (p.model == ModelKind::detuned) m += build_detuning(p).matrix;
  return checked_hermitian(std::move(m));
}

Eigen::VectorXd decay_rates(const ModelParams& p) {
  p.validate();
  double per_excited = 0.5 * p.gamma;
  double per_photon = 0.5 * p.kappa;
  if (p.dissipator == DissipatorConvention::literal) {
    // Σ_{k=1..3} Σ_{j=L,R}: each atom term picked up twice, each mode term
    // three times.
    per_excited = 2.0 * 0.5 * p.gamma;
    per_photon = 3.0 * 0.5 * p.kappa;
  }
  Eigen::VectorXd rates(static_cast<Eigen::Index>(basis_dimension(p.n_max)));
  Eigen::Index i = 0;
  for (const BasisState& s : enumerate_basis(p.n_max)) {
    rates(i++) = per_excited * excited_atoms(s) + per_photon * (s.n_left + s.n_right);
  }
  return rates;
}

Operator build_conditional(const ModelParams& p) {
  Operator h = build_total(p);
  const Eigen::VectorXd rates = decay_rates(p);
  const Complex i_unit(0.0, 1.0);
  for (Eigen::Index k = 0; k < rates.size(); ++k) h.matrix(k, k) -= i_unit * rates(k);
  h.hermitian = (rates.array() == 0.0).all();
  return h;
}

Operator excitation_number_operator(int n_max) {
  Eigen::MatrixXcd m = zeros(n_max);
  Eigen::Index i = 0;
  for (const BasisState& s : enumerate_basis(n_max)) {
    m(i, i) = excitation_number(s);
    ++i;
  }
  return Operator{std::move(m), true};
}

}  // namespace fredkin
