// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/relax.hpp"

#include <cmath>
#include <stdexcept>

namespace edgewire {

namespace {

constexpr double kWeightFloor = 1e-14;

}  // namespace

Relaxation::Relaxation(const FockSpace& space, const OperatorMatrix& h, std::vector<char> wires)
    : wires_(std::move(wires)) {
  if (h.rows() != space.dimension() || h.cols() != space.dimension())
    throw std::invalid_argument("relaxation Hamiltonian has the wrong dimension");
  if (!is_hermitian(h)) throw std::invalid_argument("relaxation Hamiltonian is not Hermitian");
  space.modes().require_wires(wires_);

  const double scale = std::max(h.cwiseAbs().maxCoeff(), 1.0);
  const std::uint32_t inside = space.modes().wire_mask(wires_);
  for (std::size_t i = 0; i < space.modes().size(); ++i) {
    if (inside & (1u << i)) continue;
    if (commutator_norm(h, space.creation(i)) > 1e-12 * scale)
      throw std::invalid_argument("relaxation Hamiltonian acts outside the relaxing wires");
  }

  const auto sectors = SectorDecomposition::charge_and_spin(space, wires_);
  const double degeneracy_tol = 1e-9 * scale;
  for (const auto& s : sectors.sectors()) {
    if (commutator_norm(h, s.projector) > 1e-10 * scale)
      throw std::invalid_argument("relaxation Hamiltonian does not conserve charge and spin");
    const OperatorMatrix restricted = s.basis.adjoint() * h * s.basis;
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(restricted);
    if (solver.info() != Eigen::Success) throw std::runtime_error("sector eigensolver failed");
    const double e0 = solver.eigenvalues()(0);
    Eigen::Index count = 0;
    while (count < solver.eigenvalues().size() && solver.eigenvalues()(count) - e0 <= degeneracy_tol) ++count;
    const OperatorMatrix ground = s.basis * solver.eigenvectors().leftCols(count);
    grounds_.push_back({s, e0, ground * ground.adjoint()});
  }
}

StateVector Relaxation::operator()(const StateVector& state) const {
  StateVector out = StateVector::Zero(state.size());
  for (const auto& g : grounds_) {
    const StateVector component = g.sector.projector * state;
    const double weight = component.norm();
    if (weight < kWeightFloor) continue;
    const StateVector relaxed = g.ground_projector * component;
    const double relaxed_norm = relaxed.norm();
    if (relaxed_norm <= 1e-10 * weight)
      throw std::domain_error("sector component is orthogonal to its ground space; relaxation target undefined");
    out += relaxed * (weight / relaxed_norm);
  }
  const double norm = out.norm();
  if (norm < kWeightFloor) throw std::domain_error("relaxation produced the zero vector");
  return out / norm;
}

DensityMatrix Relaxation::operator()(const DensityMatrix& rho) const {
  // K_s = sqrt(w_s / v_s) Q_s P_s with w_s = Tr(P_s rho) and v_s = Tr(Q_s P_s rho P_s Q_s)
  std::vector<OperatorMatrix> maps;
  for (const auto& g : grounds_) {
    const double weight = (g.sector.projector * rho).trace().real();
    if (weight < kWeightFloor) continue;
    const OperatorMatrix k = g.ground_projector * g.sector.projector;
    const double relaxed = (k * rho * k.adjoint()).trace().real();
    if (relaxed <= 1e-20 * weight)
      throw std::domain_error("sector component is orthogonal to its ground space; relaxation target undefined");
    maps.push_back(k * std::sqrt(weight / relaxed));
  }
  if (maps.empty()) throw std::domain_error("relaxation produced the zero state");
  OperatorMatrix total = OperatorMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : maps) total += k;
  DensityMatrix out = total * rho * total.adjoint();
  const double trace = out.trace().real();
  if (trace < kWeightFloor) throw std::domain_error("relaxation produced the zero state");
  return out / trace;
}

StateVector relax_to_ground(const StateVector& state, const OperatorMatrix& h, const FockSpace& space,
                            const std::vector<char>& wires) {
  return Relaxation(space, h, wires)(state);
}

}  // namespace edgewire
