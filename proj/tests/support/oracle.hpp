#pragma once

// Independent reference constructions used only by the tests. They share no
// code with the library: operators come from Kronecker products of single-
// site matrices and time evolution from an adaptive Runge-Kutta integrator.

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>
#include <boost/numeric/odeint.hpp>

#include "fredkin/params.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Level order gL, gR, g0, e0.
inline Mat ket_bra(int to, int from) {
  Mat m = Mat::Zero(4, 4);
  m(to, from) = 1.0;
  return m;
}

inline Mat annihilation(int n_max) {
  Mat a = Mat::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// atom1 ⊗ atom2 ⊗ atom3 ⊗ mode L ⊗ mode R
inline Mat product(const Mat& a1, const Mat& a2, const Mat& a3, const Mat& l, const Mat& r) {
  const Mat m12 = Eigen::kroneckerProduct(a1, a2).eval();
  const Mat m123 = Eigen::kroneckerProduct(m12, a3).eval();
  const Mat m1234 = Eigen::kroneckerProduct(m123, l).eval();
  return Eigen::kroneckerProduct(m1234, r).eval();
}

inline Mat on_atom(int k, const Mat& op, int n_max) {
  const Mat id4 = Mat::Identity(4, 4);
  const Mat idm = Mat::Identity(n_max + 1, n_max + 1);
  return product(k == 0 ? op : id4, k == 1 ? op : id4, k == 2 ? op : id4, idm, idm);
}

inline Mat cavity_coupling(double g, int n_max) {
  const Mat id4 = Mat::Identity(4, 4);
  const Mat idm = Mat::Identity(n_max + 1, n_max + 1);
  const Mat a = annihilation(n_max);
  Mat h = Mat::Zero(64 * (n_max + 1) * (n_max + 1), 64 * (n_max + 1) * (n_max + 1));
  for (int k = 0; k < 3; ++k) {
    const Mat sl = ket_bra(3, 0);
    const Mat sr = ket_bra(3, 1);
    h += g * product(k == 0 ? sl : id4, k == 1 ? sl : id4, k == 2 ? sl : id4, a, idm);
    h += g * product(k == 0 ? sr : id4, k == 1 ? sr : id4, k == 2 ? sr : id4, idm, a);
  }
  return h + h.adjoint().eval();
}

inline Mat laser(double omega, int n_max) {
  const Mat up = on_atom(0, ket_bra(3, 2), n_max);
  return omega * (up + up.adjoint());
}

inline Mat excited_count(int n_max) {
  Mat m = on_atom(0, ket_bra(3, 3), n_max);
  m += on_atom(1, ket_bra(3, 3), n_max);
  m += on_atom(2, ket_bra(3, 3), n_max);
  return m;
}

inline Mat photon_count(int n_max) {
  const Mat id4 = Mat::Identity(4, 4);
  const Mat idm = Mat::Identity(n_max + 1, n_max + 1);
  const Mat a = annihilation(n_max);
  const Mat n = a.adjoint() * a;
  return product(id4, id4, id4, n, idm) + product(id4, id4, id4, idm, n);
}

inline Mat total(const fredkin::ModelParams& p) {
  Mat h = cavity_coupling(p.g, p.n_max) + laser(p.omega, p.n_max);
  if (p.model == fredkin::ModelKind::detuned) h += p.delta * excited_count(p.n_max);
  return h;
}

inline Mat conditional(const fredkin::ModelParams& p) {
  const bool literal = p.dissipator == fredkin::DissipatorConvention::literal;
  const double atom_rate = literal ? p.gamma : p.gamma / 2.0;
  const double photon_rate = literal ? 1.5 * p.kappa : p.kappa / 2.0;
  const std::complex<double> i(0.0, 1.0);
  return total(p) - i * (atom_rate * excited_count(p.n_max) + photon_rate * photon_count(p.n_max));
}

// dψ/dt = −iHψ with dopri5 and tight error control; returns the unnormalised
// state at t.
inline Vec integrate(const Mat& h, const Vec& psi0, double t, double tol = 1e-12) {
  using State = std::vector<std::complex<double>>;
  const Eigen::SparseMatrix<std::complex<double>> hs = h.sparseView();
  const std::complex<double> minus_i(0.0, -1.0);
  auto rhs = [&](const State& x, State& dxdt, double) {
    const Eigen::Map<const Vec> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::Map<Vec> dv(dxdt.data(), static_cast<Eigen::Index>(dxdt.size()));
    dv = minus_i * (hs * xv);
  };
  State x(psi0.data(), psi0.data() + psi0.size());
  namespace odeint = boost::numeric::odeint;
  odeint::integrate_adaptive(odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>()),
                             rhs, x, 0.0, t, 0.1);
  return Eigen::Map<Vec>(x.data(), static_cast<Eigen::Index>(x.size()));
}

}  // namespace oracle
