#include "fredkin/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace fredkin {

std::string_view to_string(AtomLevel level) {
  switch (level) {
    case AtomLevel::gL: return "gL";
    case AtomLevel::gR: return "gR";
    case AtomLevel::g0: return "g0";
    case AtomLevel::e0: return "e0";
  }
  return "?";
}

AtomLevel parse_atom_level(std::string_view text) {
  if (text == "gL") return AtomLevel::gL;
  if (text == "gR") return AtomLevel::gR;
  if (text == "g0") return AtomLevel::g0;
  if (text == "e0") return AtomLevel::e0;
  throw std::invalid_argument("unknown atom level '" + std::string(text) + "'");
}

BasisState make_state(AtomLevel a1, AtomLevel a2, AtomLevel a3, int n_left, int n_right) {
  return BasisState{{a1, a2, a3}, n_left, n_right};
}

int excited_atoms(const BasisState& s) {
  int count = 0;
  for (AtomLevel a : s.atoms) {
    if (a == AtomLevel::e0) ++count;
  }
  return count;
}

int excitation_number(const BasisState& s) { return excited_atoms(s) + s.n_left + s.n_right; }

std::string label(const BasisState& s) {
  std::string out = "|";
  for (int k = 0; k < kAtomCount; ++k) {
    if (k) out += ',';
    out += to_string(s.atoms[k]);
  }
  out += ';' + std::to_string(s.n_left) + ',' + std::to_string(s.n_right) + '>';
  return out;
}

void check_n_max(int n_max) {
  if (n_max < 1 || n_max > kMaxPhotons) {
    throw std::invalid_argument("n_max must be in [1, " + std::to_string(kMaxPhotons) + "], got " +
                                std::to_string(n_max));
  }
}

std::size_t basis_dimension(int n_max) {
  const auto modes = static_cast<std::size_t>(n_max + 1);
  return 64 * modes * modes;
}

int n_max_for_dimension(std::size_t dim) {
  for (int n = 1; n <= kMaxPhotons; ++n) {
    if (basis_dimension(n) == dim) return n;
  }
  throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a valid basis size");
}

std::size_t index_of(const BasisState& s, int n_max) {
  if (s.n_left < 0 || s.n_left > n_max || s.n_right < 0 || s.n_right > n_max) {
    throw std::out_of_range("photon number outside truncation in " + label(s));
  }
  const auto modes = static_cast<std::size_t>(n_max + 1);
  std::size_t atoms = 0;
  for (AtomLevel a : s.atoms) atoms = atoms * kLevelCount + static_cast<std::size_t>(a);
  return (atoms * modes + static_cast<std::size_t>(s.n_left)) * modes +
         static_cast<std::size_t>(s.n_right);
}

BasisState state_at(std::size_t index, int n_max) {
  if (index >= basis_dimension(n_max)) throw std::out_of_range("basis index out of range");
  const auto modes = static_cast<std::size_t>(n_max + 1);
  BasisState s;
  s.n_right = static_cast<int>(index % modes);
  index /= modes;
  s.n_left = static_cast<int>(index % modes);
  index /= modes;
  for (int k = kAtomCount - 1; k >= 0; --k) {
    s.atoms[k] = static_cast<AtomLevel>(index % kLevelCount);
    index /= kLevelCount;
  }
  return s;
}

std::vector<BasisState> enumerate_basis(int n_max) {
  check_n_max(n_max);
  std::vector<BasisState> out;
  out.reserve(basis_dimension(n_max));
  for (int l1 = 0; l1 < kLevelCount; ++l1)
    for (int l2 = 0; l2 < kLevelCount; ++l2)
      for (int l3 = 0; l3 < kLevelCount; ++l3)
        for (int nl = 0; nl <= n_max; ++nl)
          for (int nr = 0; nr <= n_max; ++nr)
            out.push_back(make_state(static_cast<AtomLevel>(l1), static_cast<AtomLevel>(l2),
                                     static_cast<AtomLevel>(l3), nl, nr));
  return out;
}

StateVector basis_vector(const BasisState& s, int n_max) {
  check_n_max(n_max);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(basis_dimension(n_max)));
  psi(static_cast<Eigen::Index>(index_of(s, n_max))) = 1.0;
  return psi;
}

StateVector state_from_labels(int n_max, AtomLevel a1, AtomLevel a2, AtomLevel a3, int n_left,
                              int n_right) {
  return basis_vector(make_state(a1, a2, a3, n_left, n_right), n_max);
}

bool is_normalized(const StateVector& psi, double tol) { return std::abs(psi.norm() - 1.0) <= tol; }

}  // namespace fredkin
