// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measure.hpp
 * @brief Total-spin sectors of a set of wires and projective measurements on them.
 */

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace edgewire {

/// (J, J_z) stored as twice their values so half-integers stay exact.
struct SpinLabel {
  int twice_j = 0;
  int twice_m = 0;

  static SpinLabel of(double j, double m);

  double j() const { return twice_j / 2.0; }
  double m() const { return twice_m / 2.0; }
  bool is_integer() const { return twice_j % 2 == 0; }
  std::string to_string() const;

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
};

/// Orthonormal basis and projector of one joint eigenspace.
struct SymmetrySector {
  std::optional<int> charge;
  SpinLabel spin;
  OperatorMatrix basis;      // dimension x rank, orthonormal columns
  OperatorMatrix projector;  // basis * basis^dagger
};

/**
 * Joint eigenspaces of J^2 and J_z (and optionally the charge) of the summed
 * spin of `wires`, over the full Fock space. Sectors are ordered by charge,
 * then J descending, then J_z descending. J^2 eigenvalues are snapped to
 * j(j+1) within 1e-6; a failure to snap throws std::logic_error.
 */
class SectorDecomposition {
 public:
  static SectorDecomposition spin(const FockSpace& space, const std::vector<char>& wires);
  static SectorDecomposition charge_and_spin(const FockSpace& space, const std::vector<char>& wires);

  const std::vector<SymmetrySector>& sectors() const { return sectors_; }
  const std::vector<char>& wires() const { return wires_; }
  Eigen::Index dimension() const { return dimension_; }

  /// nullptr when no sector carries the label.
  const SymmetrySector* find(SpinLabel spin, std::optional<int> charge = std::nullopt) const;

  /// Sum of the projectors of every integer-J (or half-odd-J) sector.
  const OperatorMatrix& class_projector(bool integer_spin) const {
    return integer_spin ? integer_projector_ : half_odd_projector_;
  }

 private:
  SectorDecomposition(const FockSpace& space, const std::vector<char>& wires, bool with_charge);

  std::vector<char> wires_;
  Eigen::Index dimension_ = 0;
  std::vector<SymmetrySector> sectors_;
  OperatorMatrix integer_projector_;
  OperatorMatrix half_odd_projector_;
};

struct MeasurementOutcome {
  SpinLabel spin;
  double probability = 0;
  StateVector post_state;
};

struct MixedMeasurementOutcome {
  SpinLabel spin;
  double probability = 0;
  DensityMatrix post_state;
};

/// Outcomes with probability below this are dropped.
inline constexpr double negligible_probability = 1e-14;

std::vector<MeasurementOutcome> spin_sectors(const StateVector& state, const SectorDecomposition& sectors);
std::vector<MeasurementOutcome> spin_sectors(const StateVector& state, const FockSpace& space,
                                             const std::vector<char>& wires);
std::vector<MixedMeasurementOutcome> spin_sectors(const DensityMatrix& rho, const SectorDecomposition& sectors);

MeasurementOutcome measure_spin(const StateVector& state, const SectorDecomposition& sectors, Rng& rng);
MixedMeasurementOutcome measure_spin(const DensityMatrix& rho, const SectorDecomposition& sectors, Rng& rng);

enum class SpinClass { integer, half_odd_integer };

const char* to_string(SpinClass c);

struct ClassOutcome {
  SpinClass spin_class = SpinClass::integer;
  double probability = 0;
  StateVector post_state;
};

struct MixedClassOutcome {
  SpinClass spin_class = SpinClass::integer;
  double probability = 0;
  DensityMatrix post_state;
};

/// Born probability of the integer-spin class.
double integer_class_probability(const StateVector& state, const SectorDecomposition& sectors);
double integer_class_probability(const DensityMatrix& rho, const SectorDecomposition& sectors);

ClassOutcome measure_spin_class(const StateVector& state, const SectorDecomposition& sectors, Rng& rng);
MixedClassOutcome measure_spin_class(const DensityMatrix& rho, const SectorDecomposition& sectors, Rng& rng);

}  // namespace edgewire
