#pragma once

#include <array>

#include "fredkin/hilbert.hpp"

// Named states of the two closed sectors that carry the gate dynamics.
//
// Swap sector: closure of |g0,gL,gR;0,0> under the coupling. swap_sector()[0]
// is the input φ1 and swap_sector()[13] the swapped output φ14.
//
// Aligned sector: closure of |g0,gL,gL;0,0>, which the gate must leave alone.
namespace fredkin::catalogue {

std::array<BasisState, 14> swap_sector();
std::array<BasisState, 8> aligned_sector();

BasisState swap_input();   // |g0,gL,gR;0,0>
BasisState swap_output();  // |g0,gR,gL;0,0>

/// Photonic dark state (one photon, no excited atom) of the swap sector.
StateVector swap_dark_photonic(int n_max);
/// Single-excitation state reached from φ1 by the drive after Zeno projection.
StateVector swap_bright_excited(int n_max);
/// Photonic dark state of the aligned sector.
StateVector aligned_dark_photonic(int n_max);

}  // namespace fredkin::catalogue
