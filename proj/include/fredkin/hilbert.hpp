#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace fredkin {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;

inline constexpr int kAtomCount = 3;
inline constexpr int kLevelCount = 4;
inline constexpr int kMaxPhotons = 3;

// Internal level of one four-level atom. e0 is the only excited level.
enum class AtomLevel : int { gL = 0, gR = 1, g0 = 2, e0 = 3 };

std::string_view to_string(AtomLevel level);
AtomLevel parse_atom_level(std::string_view text);

// One product configuration: three atoms plus the photon numbers of the
// left- and right-circularly polarised cavity modes.
struct BasisState {
  std::array<AtomLevel, kAtomCount> atoms{AtomLevel::gL, AtomLevel::gL, AtomLevel::gL};
  int n_left = 0;
  int n_right = 0;

  bool operator==(const BasisState&) const = default;
};

BasisState make_state(AtomLevel a1, AtomLevel a2, AtomLevel a3, int n_left = 0, int n_right = 0);

/// Number of atoms in e0 plus the photons in both modes. Conserved by the
/// cavity coupling; the drive on atom 1 changes it by one.
int excitation_number(const BasisState& s);

/// Count of atoms sitting in e0.
int excited_atoms(const BasisState& s);

/// "|g0,gL,gR;0,0>" style label.
std::string label(const BasisState& s);

/// Basis size 64·(n_max+1)².
std::size_t basis_dimension(int n_max);

/// Inverse of basis_dimension; throws std::invalid_argument for any other size.
int n_max_for_dimension(std::size_t dim);

/// Flat index ((((l1·4 + l2)·4 + l3)·(n_max+1) + nL)·(n_max+1) + nR.
/// Throws std::out_of_range if a photon number exceeds the truncation.
std::size_t index_of(const BasisState& s, int n_max);

BasisState state_at(std::size_t index, int n_max);

/// Every basis state in canonical order. n_max must lie in [1, 3].
std::vector<BasisState> enumerate_basis(int n_max);

/// Unit vector on the matching basis state.
StateVector state_from_labels(int n_max, AtomLevel a1, AtomLevel a2, AtomLevel a3, int n_left = 0,
                              int n_right = 0);
StateVector basis_vector(const BasisState& s, int n_max);

bool is_normalized(const StateVector& psi, double tol = 1e-10);

void check_n_max(int n_max);

}  // namespace fredkin
