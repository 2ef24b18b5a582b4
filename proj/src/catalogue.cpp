#include "fredkin/catalogue.hpp"

#include <cmath>

namespace fredkin::catalogue {
namespace {

using L = AtomLevel;

template <std::size_t N>
StateVector combine(const std::array<BasisState, N>& states, const std::array<double, N>& coeffs,
                    double scale, int n_max) {
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(basis_dimension(n_max)));
  for (std::size_t i = 0; i < N; ++i) {
    psi(static_cast<Eigen::Index>(index_of(states[i], n_max))) += scale * coeffs[i];
  }
  return psi;
}

}  // namespace

std::array<BasisState, 14> swap_sector() {
  return {
      make_state(L::g0, L::gL, L::gR, 0, 0),  // φ1
      make_state(L::e0, L::gL, L::gR, 0, 0),
      make_state(L::gL, L::gL, L::gR, 1, 0),
      make_state(L::gL, L::e0, L::gR, 0, 0),
      make_state(L::gL, L::gR, L::gR, 0, 1),
      make_state(L::gL, L::gR, L::e0, 0, 0),
      make_state(L::gL, L::gR, L::gL, 1, 0),
      make_state(L::gR, L::gL, L::gR, 0, 1),
      make_state(L::gR, L::gL, L::e0, 0, 0),
      make_state(L::gR, L::gL, L::gL, 1, 0),
      make_state(L::gR, L::e0, L::gL, 0, 0),
      make_state(L::gR, L::gR, L::gL, 0, 1),
      make_state(L::e0, L::gR, L::gL, 0, 0),
      make_state(L::g0, L::gR, L::gL, 0, 0),  // φ14
  };
}

std::array<BasisState, 8> aligned_sector() {
  return {
      make_state(L::g0, L::gL, L::gL, 0, 0),
      make_state(L::e0, L::gL, L::gL, 0, 0),
      make_state(L::gL, L::gL, L::gL, 1, 0),
      make_state(L::gL, L::e0, L::gL, 0, 0),
      make_state(L::gL, L::gR, L::gL, 0, 1),
      make_state(L::gL, L::gL, L::e0, 0, 0),
      make_state(L::gL, L::gL, L::gR, 0, 1),
      make_state(L::gR, L::gL, L::gL, 0, 1),
  };
}

BasisState swap_input() { return make_state(L::g0, L::gL, L::gR); }
BasisState swap_output() { return make_state(L::g0, L::gR, L::gL); }

StateVector swap_dark_photonic(int n_max) {
  // (−φ3 + φ5 − φ7 + φ8 − φ10 + φ12)/√6
  const std::array<double, 14> c{0, 0, -1, 0, 1, 0, -1, 1, 0, -1, 0, 1, 0, 0};
  return combine(swap_sector(), c, 1.0 / std::sqrt(6.0), n_max);
}

StateVector swap_bright_excited(int n_max) {
  // (−φ2 + φ4 − φ6 + φ9 − φ11 + φ13)/√6
  const std::array<double, 14> c{0, -1, 0, 1, 0, -1, 0, 0, 1, 0, -1, 0, 1, 0};
  return combine(swap_sector(), c, 1.0 / std::sqrt(6.0), n_max);
}

StateVector aligned_dark_photonic(int n_max) {
  // (−φ3' + φ5' + φ7' + φ8')/2
  const std::array<double, 8> c{0, 0, -1, 0, 1, 0, 1, 1};
  return combine(aligned_sector(), c, 0.5, n_max);
}

}  // namespace fredkin::catalogue
