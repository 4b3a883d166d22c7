// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/protocol.hpp"

#include "edgewire/hubbard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <variant>

namespace edgewire {

namespace {

std::string gate_key(const GateSpec& spec) {
  if (auto* g = std::get_if<Cnot>(&spec)) return std::string("cnot:") + g->control + ">" + g->target;
  if (auto* g = std::get_if<Hadamard>(&spec)) return std::string("h:") + g->wire;
  if (auto* g = std::get_if<IY>(&spec)) return std::string("iy:") + g->wire;
  return "rotation";
}

const std::vector<SpinLabel>& bell_branches() {
  static const std::vector<SpinLabel> branches{{2, 2}, {2, 0}, {2, -2}, {0, 0}};
  return branches;
}

}  // namespace

void SpinAmplitudes::validate() const {
  const double norm2 = std::norm(g1) + std::norm(g2);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("spin amplitudes must satisfy |g1|^2 + |g2|^2 = 1");
}

SpinAmplitudes random_spin_amplitudes(Rng& rng) {
  // four independent normals via Box-Muller, normalized: Haar on the Bloch sphere
  double x[4];
  for (int i = 0; i < 4; i += 2) {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    x[i] = r * std::cos(2 * std::numbers::pi * u2);
    x[i + 1] = r * std::sin(2 * std::numbers::pi * u2);
  }
  const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return {Complex(x[0] / n, x[1] / n), Complex(x[2] / n, x[3] / n)};
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::electronic:
      return "electronic";
    case Variant::coldatom:
      return "coldatom";
    case Variant::mixed:
      return "mixed";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  if (name == "electronic") return Variant::electronic;
  if (name == "coldatom") return Variant::coldatom;
  if (name == "mixed") return Variant::mixed;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

CorrectionStep bob_correction(SpinLabel spin) {
  if (spin == SpinLabel{2, 2}) return {{IY{'b'}}};
  if (spin == SpinLabel{2, 0}) return {{Hadamard{'b'}, IY{'b'}}};
  if (spin == SpinLabel{2, -2}) return {{}};
  if (spin == SpinLabel{0, 0}) return {{Hadamard{'b'}}};
  throw std::invalid_argument("no correction for (J, J_z) = (" + spin.to_string() + ")");
}

ResourceState ResourceState::pure_singlet() { return diagonal(0, 0, 1); }

ResourceState ResourceState::diagonal(double a_doublon, double b_doublon, double singlet) {
  ResourceState r;
  r.rho.diagonal() << a_doublon, b_doublon, singlet;
  return r;
}

void ResourceState::validate() const {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("resource is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-12) throw std::invalid_argument("resource trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -1e-12) throw std::invalid_argument("resource is not positive semidefinite");
  if (!(singlet_weight() > 0)) throw std::invalid_argument("resource has zero singlet weight");
}

TeleportSetup::TeleportSetup(double relax_lambda)
    : space_(ModeSet::teleportation()),
      alice_sectors_(SectorDecomposition::spin(space_, {'c', 'a'})),
      relaxation_(space_, build_h_lambda(relax_lambda, space_), {'a', 'b'}) {
  for (const GateSpec& spec : {GateSpec{Cnot{'c', 'a'}}, GateSpec{Hadamard{'c'}}, GateSpec{Hadamard{'b'}},
                               GateSpec{IY{'b'}}})
    unitaries_.emplace_back(gate_key(spec), gate_unitary(spec, space_));
}

const OperatorMatrix& TeleportSetup::unitary(const GateSpec& spec) const {
  const std::string key = gate_key(spec);
  for (const auto& [k, u] : unitaries_)
    if (k == key) return u;
  throw std::invalid_argument("gate " + key + " is not part of the teleportation setup");
}

std::vector<StateVector> TeleportSetup::resource_basis(const SpinAmplitudes& g) const {
  const OperatorMatrix c_dag = g.g1 * space_.creation(up('c')) + g.g2 * space_.creation(down('c'));
  return {c_dag * space_.product_state({up('a'), down('a')}), c_dag * space_.product_state({up('b'), down('b')}),
          c_dag * singlet_state(space_)};
}

Eigen::Matrix2cd TeleportSetup::bob_spin_density(const DensityMatrix& rho) const {
  Eigen::Matrix2cd out;
  const Mode modes[2] = {up('b'), down('b')};
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp)
      out(s, sp) = (space_.creation(modes[sp]) * space_.annihilation(modes[s]) * rho).trace();
  return out;
}

Eigen::Matrix2cd TeleportSetup::bob_spin_density(const StateVector& state) const {
  Eigen::Matrix2cd out;
  const Mode modes[2] = {up('b'), down('b')};
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp)
      out(s, sp) = state.dot(space_.creation(modes[sp]) * (space_.annihilation(modes[s]) * state));
  return out;
}

StateVector prepare_initial(const TeleportSetup& setup, const SpinAmplitudes& g, Variant variant) {
  g.validate();
  const FockSpace& space = setup.space();
  const OperatorMatrix c_dag = g.g1 * space.creation(up('c')) + g.g2 * space.creation(down('c'));
  switch (variant) {
    case Variant::electronic:
    case Variant::mixed:
      return c_dag * singlet_state(space);
    case Variant::coldatom:
      return c_dag * bonding_pair_state(space);
  }
  throw std::invalid_argument("unknown variant");
}

DensityMatrix prepare_mixed(const TeleportSetup& setup, const SpinAmplitudes& g, const ResourceState& resource) {
  g.validate();
  resource.validate();
  const auto basis = setup.resource_basis(g);
  const Eigen::Index dim = setup.space().dimension();
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) rho += resource.rho(k, l) * basis[k] * basis[l].adjoint();
  return rho;
}

AliceResult alice_bell_measurement(const TeleportSetup& setup, const StateVector& state, Rng& rng) {
  StateVector psi = setup.unitary(Cnot{'c', 'a'}) * state;
  psi = setup.unitary(Hadamard{'c'}) * psi;
  auto outcome = measure_spin(psi, setup.alice_sectors(), rng);
  return {std::move(outcome.post_state), {outcome.spin}};
}

StateVector bob_apply_correction(const TeleportSetup& setup, const ClassicalMessage& message,
                                 const StateVector& state) {
  StateVector psi = state;
  for (const auto& gate : bob_correction(message.spin).gates) psi = setup.unitary(gate) * psi;
  return psi;
}

DensityMatrix bob_apply_correction(const TeleportSetup& setup, const ClassicalMessage& message,
                                   const DensityMatrix& rho) {
  DensityMatrix out = rho;
  for (const auto& gate : bob_correction(message.spin).gates) {
    const OperatorMatrix& u = setup.unitary(gate);
    out = u * out * u.adjoint();
  }
  return out;
}

double teleport_fidelity(const TeleportSetup& setup, const StateVector& state, const SpinAmplitudes& g) {
  const Eigen::Vector2cd t = g.spinor();
  const double f2 = t.dot(setup.bob_spin_density(state) * t).real();
  return std::sqrt(std::max(f2, 0.0));
}

double teleport_fidelity(const TeleportSetup& setup, const DensityMatrix& rho, const SpinAmplitudes& g) {
  const Eigen::Vector2cd t = g.spinor();
  const double f2 = t.dot(setup.bob_spin_density(rho) * t).real();
  return std::sqrt(std::max(f2, 0.0));
}

TeleportRun run_teleport_once(const TeleportSetup& setup, const SpinAmplitudes& g, Variant variant, Rng& rng,
                              int max_rounds) {
  if (variant == Variant::mixed) throw std::invalid_argument("use run_teleport_mixed for the mixed variant");
  TeleportRun run;
  StateVector psi = prepare_initial(setup, g, variant);

  if (variant == Variant::coldatom) {
    while (true) {
      if (run.rounds == max_rounds)
        throw std::runtime_error("no integer-spin outcome after " + std::to_string(max_rounds) + " rounds");
      run.integer_probabilities.push_back(integer_class_probability(psi, setup.alice_sectors()));
      auto outcome = measure_spin_class(psi, setup.alice_sectors(), rng);
      ++run.rounds;
      psi = std::move(outcome.post_state);
      if (outcome.spin_class == SpinClass::integer) break;
      psi = setup.relaxation()(psi);
      ++run.relaxations;
    }
  } else {
    run.rounds = 1;
  }

  auto alice = alice_bell_measurement(setup, psi, rng);
  run.branch = alice.message.spin;
  run.bob_state = bob_apply_correction(setup, alice.message, alice.state);
  run.fidelity = teleport_fidelity(setup, run.bob_state, g);
  return run;
}

MixedTeleportRun run_teleport_mixed(const TeleportSetup& setup, const SpinAmplitudes& g,
                                    const ResourceState& resource, Rng& rng, int max_rounds) {
  MixedTeleportRun run;
  DensityMatrix rho = prepare_mixed(setup, g, resource);

  while (true) {
    if (run.rounds == max_rounds)
      throw std::runtime_error("no integer-spin outcome after " + std::to_string(max_rounds) + " rounds");
    run.integer_probabilities.push_back(integer_class_probability(rho, setup.alice_sectors()));
    auto outcome = measure_spin_class(rho, setup.alice_sectors(), rng);
    ++run.rounds;
    rho = std::move(outcome.post_state);
    if (outcome.spin_class == SpinClass::integer) break;
    rho = setup.relaxation()(rho);
    ++run.relaxations;
  }

  rho = setup.unitary(Cnot{'c', 'a'}) * rho * setup.unitary(Cnot{'c', 'a'}).adjoint();
  rho = setup.unitary(Hadamard{'c'}) * rho * setup.unitary(Hadamard{'c'}).adjoint();
  auto outcome = measure_spin(rho, setup.alice_sectors(), rng);
  run.branch = outcome.spin;
  run.final_state = bob_apply_correction(setup, ClassicalMessage{outcome.spin}, outcome.post_state);
  run.fidelity = teleport_fidelity(setup, run.final_state, g);
  return run;
}

TeleportReport run_trials(const SpinAmplitudes& g, Variant variant, std::size_t n, std::uint64_t seed,
                          const std::optional<ResourceState>& resource) {
  if (n == 0) throw std::invalid_argument("run_trials needs at least one trial");
  g.validate();
  const TeleportSetup setup;
  const ResourceState mixed_resource = resource.value_or(ResourceState::diagonal(0.25, 0.25, 0.5));

  TeleportReport report;
  report.variant = variant;
  report.seed = seed;
  report.trials = n;
  report.g = g;
  for (const auto& b : bell_branches()) report.branch_counts.emplace_back(b, 0);
  report.min_fidelity = std::numeric_limits<double>::infinity();

  double fidelity_sum = 0;
  double rounds_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    SpinLabel branch;
    int rounds;
    double fidelity;
    if (variant == Variant::mixed) {
      const auto run = run_teleport_mixed(setup, g, mixed_resource, rng);
      branch = run.branch;
      rounds = run.rounds;
      fidelity = run.fidelity;
    } else {
      const auto run = run_teleport_once(setup, g, variant, rng);
      branch = run.branch;
      rounds = run.rounds;
      fidelity = run.fidelity;
    }
    auto it = std::find_if(report.branch_counts.begin(), report.branch_counts.end(),
                           [&](const auto& p) { return p.first == branch; });
    if (it == report.branch_counts.end()) throw std::logic_error("unexpected branch " + branch.to_string());
    ++it->second;
    ++report.rounds_histogram[rounds];
    report.min_fidelity = std::min(report.min_fidelity, fidelity);
    fidelity_sum += fidelity;
    rounds_sum += rounds;
  }
  report.mean_fidelity = fidelity_sum / static_cast<double>(n);
  report.mean_rounds = rounds_sum / static_cast<double>(n);
  return report;
}

}  // namespace edgewire
