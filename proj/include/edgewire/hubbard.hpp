// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hubbard.hpp
 * @brief Coulomb + hopping coupling between the edge modes of wires a and b.
 *
 *   H_int = (e2/2)(n_a - 1)^2 + (e2/2)(n_b - 1)^2 + H_lambda
 *   H_lambda = lambda * sum_s (a+_s b_s + b+_s a_s)
 */

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/measure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgewire {

struct CouplingParams {
  double e2 = 1.0;
  double lambda = 0.01;

  void validate() const;
  bool cold_atom() const { return e2 == 0.0; }
  /// Non-fatal notes about the perturbative regime (lambda/e2 > 0.1).
  std::vector<std::string> regime_warnings() const;
};

OperatorMatrix build_h_lambda(double lambda, const FockSpace& space);
OperatorMatrix build_h_int(const CouplingParams& params, const FockSpace& space);

/// Sector selector for ground_state; wires default to {a, b}.
struct SectorKey {
  int charge = 0;
  SpinLabel spin;
};

struct GroundState {
  double energy = 0;
  /// Orthonormal columns spanning the ground space.
  OperatorMatrix basis;
  bool degenerate = false;

  StateVector state() const { return basis.col(0); }
};

/**
 * Lowest eigenspace of h, optionally restricted to one (charge, J, J_z)
 * sector of `wires`. Levels within `degeneracy_tol` of the lowest are part
 * of the ground space; by default that is 1e-9 * max(max|h_ij|, 1). A
 * unique ground state is rotated so that its overlap with `phase_reference`
 * (when given and nonzero) is real and positive.
 */
GroundState ground_state(const OperatorMatrix& h, const FockSpace& space, std::optional<SectorKey> sector = std::nullopt,
                         const std::vector<char>& wires = {'a', 'b'},
                         const std::optional<StateVector>& phase_reference = std::nullopt,
                         std::optional<double> degeneracy_tol = std::nullopt);

/// (a+_up b+_down + b+_up a+_down)|0> / sqrt2
StateVector singlet_state(const FockSpace& space);

/// (a+_up - b+_up)(a+_down - b+_down)|0> / 2
StateVector bonding_pair_state(const FockSpace& space);

/// Ground space of H_int over the whole Fock space, with the regime's phase convention.
GroundState coupling_ground_state(const CouplingParams& params, const FockSpace& space);

struct PerturbativeCheck {
  double e0_exact = 0;
  double e0_perturbative = 0;
  double deviation = 0;
};

/// Exact ground energy of H_int on the a/b modes against -4 lambda^2 / e2. Throws for e2 == 0.
PerturbativeCheck perturbative_check(const CouplingParams& params);

struct QuarticFit {
  /// Least-squares C in deviation ~ C lambda^4 / e2^3.
  double coefficient = 0;
  std::vector<PerturbativeCheck> points;
};

QuarticFit fit_quartic_deviation(double e2, const std::vector<double>& lambdas);

struct HubbardReport {
  double e2 = 0;
  double lambda = 0;
  double e0_exact = 0;
  std::optional<double> e0_perturbative;
  double singlet_overlap = 0;
  double triplet_gap = 0;
  std::vector<std::string> warnings;
};

/// Everything the `hubbard` subcommand prints, on the four a/b modes.
HubbardReport hubbard_report(const CouplingParams& params);

}  // namespace edgewire
