// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/hubbard.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace edgewire {

void CouplingParams::validate() const {
  if (!std::isfinite(e2) || e2 < 0) throw std::invalid_argument("e2 must be finite and >= 0");
  if (!std::isfinite(lambda) || lambda < 0) throw std::invalid_argument("lambda must be finite and >= 0");
}

std::vector<std::string> CouplingParams::regime_warnings() const {
  std::vector<std::string> warnings;
  if (e2 > 0 && lambda / e2 > 0.1) {
    std::ostringstream msg;
    msg << "lambda/e2 = " << lambda / e2 << " > 0.1: second-order perturbation theory is not reliable here";
    warnings.push_back(msg.str());
  }
  return warnings;
}

OperatorMatrix build_h_lambda(double lambda, const FockSpace& space) {
  space.modes().require_wires({'a', 'b'});
  OperatorMatrix h = OperatorMatrix::Zero(space.dimension(), space.dimension());
  for (Spin s : {Spin::up, Spin::down}) {
    const OperatorMatrix& a_dag = space.creation(Mode{'a', s});
    const OperatorMatrix& b_dag = space.creation(Mode{'b', s});
    h += a_dag * b_dag.adjoint() + b_dag * a_dag.adjoint();
  }
  return lambda * h;
}

OperatorMatrix build_h_int(const CouplingParams& params, const FockSpace& space) {
  params.validate();
  const OperatorMatrix one = space.identity();
  const OperatorMatrix qa = space.number('a') - one;
  const OperatorMatrix qb = space.number('b') - one;
  return (params.e2 / 2) * (qa * qa + qb * qb) + build_h_lambda(params.lambda, space);
}

GroundState ground_state(const OperatorMatrix& h, const FockSpace& space, std::optional<SectorKey> sector,
                         const std::vector<char>& wires, const std::optional<StateVector>& phase_reference,
                         std::optional<double> degeneracy_tol) {
  if (!is_hermitian(h)) throw std::invalid_argument("ground_state: operator is not Hermitian");
  const double tol = degeneracy_tol.value_or(1e-9 * std::max(h.cwiseAbs().maxCoeff(), 1.0));

  OperatorMatrix basis;
  if (sector) {
    const auto sectors = SectorDecomposition::charge_and_spin(space, wires);
    const SymmetrySector* s = sectors.find(sector->spin, sector->charge);
    if (s == nullptr) throw std::invalid_argument("ground_state: empty sector");
    if (commutator_norm(h, s->projector) > 1e-10 * std::max(h.cwiseAbs().maxCoeff(), 1.0))
      throw std::invalid_argument("ground_state: operator does not commute with the sector projector");
    basis = s->basis;
  } else {
    basis = space.identity();
  }

  const OperatorMatrix restricted = basis.adjoint() * h * basis;
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(restricted);
  if (solver.info() != Eigen::Success) throw std::runtime_error("ground_state: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  Eigen::Index count = 0;
  while (count < ev.size() && ev(count) - ev(0) <= tol) ++count;

  GroundState gs;
  gs.energy = ev(0);
  gs.basis = basis * solver.eigenvectors().leftCols(count);
  gs.degenerate = count > 1;

  if (!gs.degenerate) {
    auto col = gs.basis.col(0);
    Complex anchor{0, 0};
    if (phase_reference) anchor = phase_reference->dot(col);
    if (std::abs(anchor) < 1e-12) {
      Eigen::Index i;
      col.cwiseAbs().maxCoeff(&i);
      anchor = col(i);
    }
    col *= std::conj(anchor) / std::abs(anchor);
  }
  return gs;
}

StateVector singlet_state(const FockSpace& space) {
  return (space.product_state({up('a'), down('b')}) + space.product_state({up('b'), down('a')})) / std::sqrt(2.0);
}

StateVector bonding_pair_state(const FockSpace& space) {
  const OperatorMatrix up_pair = space.creation(up('a')) - space.creation(up('b'));
  const OperatorMatrix down_pair = space.creation(down('a')) - space.creation(down('b'));
  return up_pair * (down_pair * space.vacuum()) / 2.0;
}

GroundState coupling_ground_state(const CouplingParams& params, const FockSpace& space) {
  // phase anchor: a+_up b+_down|0> in the electronic regime, a+_up a+_down|0> for cold atoms
  const StateVector anchor = params.cold_atom() ? space.product_state({up('a'), down('a')})
                                                : space.product_state({up('a'), down('b')});
  return ground_state(build_h_int(params, space), space, std::nullopt, {'a', 'b'}, anchor);
}

namespace {

const FockSpace& edge_pair_space() {
  static const FockSpace space(ModeSet::of_wires({'a', 'b'}));
  return space;
}

double lowest_in_sectors(const OperatorMatrix& h, const SectorDecomposition& sectors, int charge, int twice_j) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : sectors.sectors()) {
    if (s.charge != charge || s.spin.twice_j != twice_j) continue;
    const OperatorMatrix restricted = s.basis.adjoint() * h * s.basis;
    best = std::min(best, Eigen::SelfAdjointEigenSolver<OperatorMatrix>(restricted, Eigen::EigenvaluesOnly)
                              .eigenvalues()(0));
  }
  return best;
}

}  // namespace

PerturbativeCheck perturbative_check(const CouplingParams& params) {
  params.validate();
  if (params.e2 == 0) throw std::invalid_argument("perturbative_check needs e2 > 0");
  PerturbativeCheck check;
  check.e0_exact = coupling_ground_state(params, edge_pair_space()).energy;
  check.e0_perturbative = -4 * params.lambda * params.lambda / params.e2;
  check.deviation = std::abs(check.e0_exact - check.e0_perturbative);
  return check;
}

QuarticFit fit_quartic_deviation(double e2, const std::vector<double>& lambdas) {
  QuarticFit fit;
  double num = 0;
  double den = 0;
  for (double lambda : lambdas) {
    const auto check = perturbative_check({e2, lambda});
    fit.points.push_back(check);
    const double x = std::pow(lambda, 4) / std::pow(e2, 3);
    num += x * check.deviation;
    den += x * x;
  }
  fit.coefficient = den > 0 ? num / den : 0;
  return fit;
}

HubbardReport hubbard_report(const CouplingParams& params) {
  params.validate();
  const FockSpace& space = edge_pair_space();
  const OperatorMatrix h = build_h_int(params, space);
  const auto sectors = SectorDecomposition::charge_and_spin(space, {'a', 'b'});

  HubbardReport report;
  report.e2 = params.e2;
  report.lambda = params.lambda;
  report.warnings = params.regime_warnings();

  const GroundState gs = coupling_ground_state(params, space);
  report.e0_exact = gs.energy;
  if (params.e2 > 0) report.e0_perturbative = -4 * params.lambda * params.lambda / params.e2;

  // |<g|ground space>| is the norm of the singlet's projection onto the ground space
  report.singlet_overlap = (gs.basis.adjoint() * singlet_state(space)).norm();
  report.triplet_gap = lowest_in_sectors(h, sectors, 0, 2) - report.e0_exact;
  return report;
}

}  // namespace edgewire
