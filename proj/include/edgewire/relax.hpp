// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file relax.hpp
 * @brief Complete, symmetry-conserving relaxation of a subsystem to its ground space.
 *
 * Inside every joint (charge, J, J_z) sector of the relaxing wires the state
 * is projected onto the lowest-energy eigenspace of h restricted to that
 * sector and rescaled back to the sector's original weight. Modes of other
 * wires are untouched.
 */

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/measure.hpp"

#include <vector>

namespace edgewire {

class Relaxation {
 public:
  /// Throws if h is not Hermitian, acts on modes outside `wires`, or mixes sectors.
  Relaxation(const FockSpace& space, const OperatorMatrix& h, std::vector<char> wires = {'a', 'b'});

  StateVector operator()(const StateVector& state) const;

  /**
   * Density-matrix form. For rho = |psi><psi| it returns
   * |r(psi)><r(psi)| where r is the state-vector map.
   */
  DensityMatrix operator()(const DensityMatrix& rho) const;

  struct SectorGround {
    SymmetrySector sector;
    double energy = 0;
    OperatorMatrix ground_projector;
  };

  const std::vector<SectorGround>& sector_grounds() const { return grounds_; }

 private:
  std::vector<char> wires_;
  std::vector<SectorGround> grounds_;
};

StateVector relax_to_ground(const StateVector& state, const OperatorMatrix& h, const FockSpace& space,
                            const std::vector<char>& wires = {'a', 'b'});

}  // namespace edgewire
