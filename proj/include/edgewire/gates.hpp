// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gates.hpp
 * @brief Spin gates on edge-mode wires, lifted to the full Fock space.
 *
 * A single-wire gate is a 2x2 unitary u acting on the wire's creation
 * operators, f+_s -> sum_s' u(s', s) f+_s'. Its Fock-space lift maps every
 * occupation monomial to the product of the transformed creators, so it
 * conserves the wire's particle number, the total charge and the parity.
 */

#pragma once

#include "edgewire/fock.hpp"

#include <Eigen/Dense>

#include <variant>
#include <vector>

namespace edgewire {

using SpinMatrix = Eigen::Matrix2cd;

/// Flips the target wire's spin when the control wire holds a single spin-down fermion.
struct Cnot {
  char control;
  char target;
};

/// up -> (up + down)/sqrt2, down -> (up - down)/sqrt2
struct Hadamard {
  char wire;
};

/// (f_up, f_down) -> (f_down, -f_up)
struct IY {
  char wire;
};

struct SpinRotation {
  char wire;
  SpinMatrix u;
};

using GateSpec = std::variant<Cnot, Hadamard, IY, SpinRotation>;

SpinMatrix hadamard_matrix();
SpinMatrix iy_matrix();
SpinMatrix flip_matrix();

/// Fock-space lift of a 2x2 unitary on one wire's (up, down) creators.
OperatorMatrix lift_spin_rotation(const FockSpace& space, char wire, const SpinMatrix& u);

OperatorMatrix gate_unitary(const GateSpec& spec, const FockSpace& space);

StateVector apply_gate(const GateSpec& spec, const StateVector& state, const FockSpace& space);

/// U rho U^dagger
DensityMatrix apply_gate(const GateSpec& spec, const DensityMatrix& rho, const FockSpace& space);

/// The wires a gate touches.
std::vector<char> gate_wires(const GateSpec& spec);

}  // namespace edgewire
