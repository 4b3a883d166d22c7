// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace edgewire {

namespace {

constexpr double kUnitaryTolerance = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SpinMatrix hadamard_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  SpinMatrix h;
  h << r, r, r, -r;
  return h;
}

SpinMatrix iy_matrix() {
  // column s is the image of f+_s: up -> down, down -> -up
  SpinMatrix m;
  m << 0, -1, 1, 0;
  return m;
}

SpinMatrix flip_matrix() {
  SpinMatrix x;
  x << 0, 1, 1, 0;
  return x;
}

OperatorMatrix lift_spin_rotation(const FockSpace& space, char wire, const SpinMatrix& u) {
  space.modes().require_wires({wire});
  if ((u.adjoint() * u - SpinMatrix::Identity()).cwiseAbs().maxCoeff() > kUnitaryTolerance)
    throw std::invalid_argument("spin rotation matrix is not unitary");

  const ModeSet& modes = space.modes();
  const std::size_t n_modes = modes.size();
  const std::size_t up_index = modes.index_of(up(wire));
  const std::size_t down_index = modes.index_of(down(wire));

  // transformed creator for every mode
  std::vector<OperatorMatrix> creators;
  creators.reserve(n_modes);
  for (std::size_t i = 0; i < n_modes; ++i) {
    if (i == up_index || i == down_index) {
      const int s = (i == up_index) ? 0 : 1;
      creators.push_back(u(0, s) * space.creation(up_index) + u(1, s) * space.creation(down_index));
    } else {
      creators.push_back(space.creation(i));
    }
  }

  const Eigen::Index dim = space.dimension();
  OperatorMatrix lifted(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    StateVector v = space.vacuum();
    for (std::size_t i = n_modes; i-- > 0;)
      if (static_cast<std::uint32_t>(n) & (1u << i)) v = creators[i] * v;
    lifted.col(n) = v;
  }
  return lifted;
}

OperatorMatrix gate_unitary(const GateSpec& spec, const FockSpace& space) {
  return std::visit(
      overloaded{
          [&](const Cnot& g) -> OperatorMatrix {
            space.modes().require_wires({g.control, g.target});
            if (g.control == g.target) throw std::invalid_argument("CNOT control and target must differ");
            const OperatorMatrix n_up = space.number(up(g.control));
            const OperatorMatrix n_down = space.number(down(g.control));
            // control active only on single spin-down occupancy
            const OperatorMatrix active = n_down * (space.identity() - n_up);
            const OperatorMatrix flip = lift_spin_rotation(space, g.target, flip_matrix());
            return active * flip + (space.identity() - active);
          },
          [&](const Hadamard& g) -> OperatorMatrix { return lift_spin_rotation(space, g.wire, hadamard_matrix()); },
          [&](const IY& g) -> OperatorMatrix { return lift_spin_rotation(space, g.wire, iy_matrix()); },
          [&](const SpinRotation& g) -> OperatorMatrix { return lift_spin_rotation(space, g.wire, g.u); },
      },
      spec);
}

StateVector apply_gate(const GateSpec& spec, const StateVector& state, const FockSpace& space) {
  return gate_unitary(spec, space) * state;
}

DensityMatrix apply_gate(const GateSpec& spec, const DensityMatrix& rho, const FockSpace& space) {
  const OperatorMatrix u = gate_unitary(spec, space);
  return u * rho * u.adjoint();
}

std::vector<char> gate_wires(const GateSpec& spec) {
  return std::visit(overloaded{
                        [](const Cnot& g) { return std::vector<char>{g.control, g.target}; },
                        [](const Hadamard& g) { return std::vector<char>{g.wire}; },
                        [](const IY& g) { return std::vector<char>{g.wire}; },
                        [](const SpinRotation& g) { return std::vector<char>{g.wire}; },
                    },
                    spec);
}

}  // namespace edgewire
