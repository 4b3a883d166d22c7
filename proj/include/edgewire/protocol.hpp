// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file protocol.hpp
 * @brief Teleporting the spin of the c electron onto the b edge mode.
 *
 * Three variants share one setup over the modes (c, a, b):
 *  - electronic: the a/b resource is the spin singlet; CNOT(c->a), Hadamard(c),
 *    a (J, J_z) measurement of c+a, then Bob's correction on b;
 *  - coldatom: the resource is the bonding pair; Alice first measures whether
 *    c+a has integer spin, and on a half-odd result relaxes a/b under H_lambda
 *    and tries again;
 *  - mixed: same loop, run on density matrices, starting from any mixture over
 *    the neutral spin-zero a/b states with nonzero singlet weight.
 */

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/gates.hpp"
#include "edgewire/measure.hpp"
#include "edgewire/relax.hpp"
#include "edgewire/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgewire {

struct SpinAmplitudes {
  Complex g1{1, 0};
  Complex g2{0, 0};

  /// Throws unless |g1|^2 + |g2|^2 = 1 within 1e-12.
  void validate() const;
  Eigen::Vector2cd spinor() const { return {g1, g2}; }
};

/// Uniform on the Bloch sphere.
SpinAmplitudes random_spin_amplitudes(Rng& rng);

enum class Variant { electronic, coldatom, mixed };

const char* to_string(Variant v);
Variant parse_variant(const std::string& name);

/// The two classical values Alice sends to Bob.
struct ClassicalMessage {
  SpinLabel spin;
};

struct CorrectionStep {
  std::vector<GateSpec> gates;  // applied in order
};

/// (1,1) -> iY, (1,0) -> H then iY, (1,-1) -> nothing, (0,0) -> H. Other labels throw.
CorrectionStep bob_correction(SpinLabel spin);

/**
 * Mixed a/b resource over the basis (a+_up a+_down|0>, b+_up b+_down|0>, singlet).
 */
struct ResourceState {
  Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();

  static ResourceState pure_singlet();
  static ResourceState diagonal(double a_doublon, double b_doublon, double singlet);

  double singlet_weight() const { return rho(2, 2).real(); }
  /// Density-matrix checks; throws std::invalid_argument if the singlet weight is 0.
  void validate() const;
};

/**
 * Operators and sector data shared by every run, built once.
 * Mode order is (c up, c down, a up, a down, b up, b down).
 */
class TeleportSetup {
 public:
  explicit TeleportSetup(double relax_lambda = 1.0);

  const FockSpace& space() const { return space_; }
  const SectorDecomposition& alice_sectors() const { return alice_sectors_; }
  const Relaxation& relaxation() const { return relaxation_; }
  const OperatorMatrix& unitary(const GateSpec& spec) const;

  /// Vectors of the three resource basis states, each multiplied by (g1 c+_up + g2 c+_down).
  std::vector<StateVector> resource_basis(const SpinAmplitudes& g) const;

  /// Spin density matrix of the single b electron, rho(s, s') = <b+_s' b_s>.
  Eigen::Matrix2cd bob_spin_density(const DensityMatrix& rho) const;
  Eigen::Matrix2cd bob_spin_density(const StateVector& state) const;

 private:
  FockSpace space_;
  SectorDecomposition alice_sectors_;
  Relaxation relaxation_;
  std::vector<std::pair<std::string, OperatorMatrix>> unitaries_;
};

StateVector prepare_initial(const TeleportSetup& setup, const SpinAmplitudes& g, Variant variant);
DensityMatrix prepare_mixed(const TeleportSetup& setup, const SpinAmplitudes& g, const ResourceState& resource);

struct AliceResult {
  StateVector state;
  ClassicalMessage message;
};

/// CNOT(c->a), Hadamard(c), then a (J, J_z) measurement of c+a.
AliceResult alice_bell_measurement(const TeleportSetup& setup, const StateVector& state, Rng& rng);

/// Bob sees only the message.
StateVector bob_apply_correction(const TeleportSetup& setup, const ClassicalMessage& message, const StateVector& state);
DensityMatrix bob_apply_correction(const TeleportSetup& setup, const ClassicalMessage& message,
                                   const DensityMatrix& rho);

/// sqrt(<t|rho_b|t>) with t = (g1, g2); equals |<t|chi>| when b holds the pure spinor chi.
double teleport_fidelity(const TeleportSetup& setup, const StateVector& state, const SpinAmplitudes& g);
double teleport_fidelity(const TeleportSetup& setup, const DensityMatrix& rho, const SpinAmplitudes& g);

inline constexpr int default_max_rounds = 64;

struct TeleportRun {
  StateVector bob_state;
  SpinLabel branch;
  int rounds = 0;
  int relaxations = 0;
  double fidelity = 0;
  /// Born probability of the integer class before each class measurement.
  std::vector<double> integer_probabilities;
};

struct MixedTeleportRun {
  DensityMatrix final_state;
  SpinLabel branch;
  int rounds = 0;
  int relaxations = 0;
  double fidelity = 0;
  std::vector<double> integer_probabilities;
};

/// Electronic or cold-atom variant. Throws std::runtime_error after max_rounds failed class measurements.
TeleportRun run_teleport_once(const TeleportSetup& setup, const SpinAmplitudes& g, Variant variant, Rng& rng,
                              int max_rounds = default_max_rounds);

MixedTeleportRun run_teleport_mixed(const TeleportSetup& setup, const SpinAmplitudes& g,
                                    const ResourceState& resource, Rng& rng, int max_rounds = default_max_rounds);

struct TeleportReport {
  Variant variant = Variant::electronic;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  SpinAmplitudes g;
  std::vector<std::pair<SpinLabel, std::size_t>> branch_counts;  // (1,1), (1,0), (1,-1), (0,0)
  std::map<int, std::size_t> rounds_histogram;
  double min_fidelity = 0;
  double mean_fidelity = 0;
  double mean_rounds = 0;
};

/// Trial i draws from Rng::for_trial(seed, i). The mixed variant uses `resource`,
/// defaulting to 1/2 singlet + 1/4 of each doublon.
TeleportReport run_trials(const SpinAmplitudes& g, Variant variant, std::size_t n, std::uint64_t seed,
                          const std::optional<ResourceState>& resource = std::nullopt);

}  // namespace edgewire
