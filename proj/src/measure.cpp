// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace edgewire {

namespace {

constexpr double kSnapTolerance = 1e-6;

int snap_twice_j(double j_squared) {
  const double j = (-1.0 + std::sqrt(1.0 + 4.0 * std::max(j_squared, 0.0))) / 2.0;
  const int twice_j = static_cast<int>(std::lround(2.0 * j));
  const double snapped = (twice_j / 2.0) * (twice_j / 2.0 + 1.0);
  if (std::abs(snapped - j_squared) > kSnapTolerance) {
    std::ostringstream msg;
    msg << "J^2 eigenvalue " << j_squared << " is not of the form j(j+1)";
    throw std::logic_error(msg.str());
  }
  return twice_j;
}

int snap_integer(double x, const char* what) {
  const long r = std::lround(x);
  if (std::abs(x - static_cast<double>(r)) > kSnapTolerance)
    throw std::logic_error(std::string(what) + " is not diagonal with integer eigenvalues");
  return static_cast<int>(r);
}

template <typename Outcome>
const Outcome& sample(const std::vector<Outcome>& outcomes, Rng& rng) {
  if (outcomes.empty()) throw std::logic_error("measurement has no outcome with nonzero probability");
  const double u = rng.uniform();
  double total = 0;
  for (const auto& o : outcomes) total += o.probability;
  double cumulative = 0;
  for (const auto& o : outcomes) {
    cumulative += o.probability / total;
    if (u < cumulative) return o;
  }
  return outcomes.back();
}

}  // namespace

SpinLabel SpinLabel::of(double j, double m) {
  return {static_cast<int>(std::lround(2 * j)), static_cast<int>(std::lround(2 * m))};
}

std::string SpinLabel::to_string() const {
  auto half = [](int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  };
  return half(twice_j) + "," + half(twice_m);
}

const char* to_string(SpinClass c) { return c == SpinClass::integer ? "integer" : "half-odd-integer"; }

SectorDecomposition SectorDecomposition::spin(const FockSpace& space, const std::vector<char>& wires) {
  return SectorDecomposition(space, wires, false);
}

SectorDecomposition SectorDecomposition::charge_and_spin(const FockSpace& space, const std::vector<char>& wires) {
  return SectorDecomposition(space, wires, true);
}

SectorDecomposition::SectorDecomposition(const FockSpace& space, const std::vector<char>& wires, bool with_charge)
    : wires_(wires), dimension_(space.dimension()) {
  const OperatorMatrix j2 = space.spin_squared(wires);
  const OperatorMatrix jz = space.spin_z(wires);
  const OperatorMatrix q = space.charge(wires);
  const Eigen::Index dim = space.dimension();

  // Jz and Q are diagonal in the occupation basis, so group basis states by them
  // and diagonalize J^2 inside each group.
  std::map<std::pair<int, int>, std::vector<Eigen::Index>> groups;
  for (Eigen::Index n = 0; n < dim; ++n) {
    const int twice_m = snap_integer(2.0 * jz(n, n).real(), "2 J_z");
    const int charge = with_charge ? snap_integer(q(n, n).real(), "charge") : 0;
    groups[{charge, twice_m}].push_back(n);
  }

  std::vector<Eigen::Index> group_of(dim);
  int g = 0;
  for (const auto& [key, members] : groups) {
    for (auto n : members) group_of[n] = g;
    ++g;
  }
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      if (group_of[r] != group_of[c] && std::abs(j2(r, c)) > 1e-9)
        throw std::logic_error("J^2 couples states of different J_z or charge");

  for (const auto& [key, members] : groups) {
    const auto k = static_cast<Eigen::Index>(members.size());
    OperatorMatrix block(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) block(r, c) = j2(members[r], members[c]);
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(block);
    if (solver.info() != Eigen::Success) throw std::runtime_error("J^2 eigensolver failed");

    std::map<int, std::vector<Eigen::Index>> by_j;
    for (Eigen::Index i = 0; i < k; ++i) by_j[snap_twice_j(solver.eigenvalues()(i))].push_back(i);

    for (const auto& [twice_j, cols] : by_j) {
      SymmetrySector sector;
      if (with_charge) sector.charge = key.first;
      sector.spin = {twice_j, key.second};
      sector.basis = OperatorMatrix::Zero(dim, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (Eigen::Index r = 0; r < k; ++r)
          sector.basis(members[r], static_cast<Eigen::Index>(c)) = solver.eigenvectors()(r, cols[c]);
      sector.projector = sector.basis * sector.basis.adjoint();
      sectors_.push_back(std::move(sector));
    }
  }

  std::sort(sectors_.begin(), sectors_.end(), [](const SymmetrySector& a, const SymmetrySector& b) {
    return std::make_tuple(a.charge.value_or(0), -a.spin.twice_j, -a.spin.twice_m) <
           std::make_tuple(b.charge.value_or(0), -b.spin.twice_j, -b.spin.twice_m);
  });

  integer_projector_ = OperatorMatrix::Zero(dim, dim);
  half_odd_projector_ = OperatorMatrix::Zero(dim, dim);
  for (const auto& s : sectors_) (s.spin.is_integer() ? integer_projector_ : half_odd_projector_) += s.projector;
}

const SymmetrySector* SectorDecomposition::find(SpinLabel spin, std::optional<int> charge) const {
  for (const auto& s : sectors_)
    if (s.spin == spin && (!charge || s.charge == charge)) return &s;
  return nullptr;
}

std::vector<MeasurementOutcome> spin_sectors(const StateVector& state, const SectorDecomposition& sectors) {
  if (state.size() != sectors.dimension()) throw std::invalid_argument("spin_sectors: dimension mismatch");
  // charge-resolved decompositions are merged so outcomes are labelled by (J, J_z) alone
  std::vector<MeasurementOutcome> outcomes;
  for (const auto& s : sectors.sectors()) {
    auto it = std::find_if(outcomes.begin(), outcomes.end(),
                           [&](const MeasurementOutcome& o) { return o.spin == s.spin; });
    if (it == outcomes.end()) {
      outcomes.push_back({s.spin, 0.0, StateVector::Zero(state.size())});
      it = std::prev(outcomes.end());
    }
    it->post_state += s.projector * state;
  }
  std::vector<MeasurementOutcome> kept;
  for (auto& o : outcomes) {
    o.probability = o.post_state.squaredNorm();
    if (o.probability < negligible_probability) continue;
    o.post_state /= std::sqrt(o.probability);
    kept.push_back(std::move(o));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const MeasurementOutcome& a, const MeasurementOutcome& b) {
    return std::make_pair(-a.spin.twice_j, -a.spin.twice_m) < std::make_pair(-b.spin.twice_j, -b.spin.twice_m);
  });
  return kept;
}

std::vector<MeasurementOutcome> spin_sectors(const StateVector& state, const FockSpace& space,
                                             const std::vector<char>& wires) {
  return spin_sectors(state, SectorDecomposition::spin(space, wires));
}

std::vector<MixedMeasurementOutcome> spin_sectors(const DensityMatrix& rho, const SectorDecomposition& sectors) {
  if (rho.rows() != sectors.dimension()) throw std::invalid_argument("spin_sectors: dimension mismatch");
  std::vector<std::pair<SpinLabel, OperatorMatrix>> projectors;
  for (const auto& s : sectors.sectors()) {
    auto it = std::find_if(projectors.begin(), projectors.end(), [&](const auto& p) { return p.first == s.spin; });
    if (it == projectors.end()) projectors.emplace_back(s.spin, s.projector);
    else it->second += s.projector;
  }
  std::vector<MixedMeasurementOutcome> kept;
  for (const auto& [spin, p] : projectors) {
    DensityMatrix post = p * rho * p;
    const double prob = post.trace().real();
    if (prob < negligible_probability) continue;
    kept.push_back({spin, prob, post / prob});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return std::make_pair(-a.spin.twice_j, -a.spin.twice_m) < std::make_pair(-b.spin.twice_j, -b.spin.twice_m);
  });
  return kept;
}

MeasurementOutcome measure_spin(const StateVector& state, const SectorDecomposition& sectors, Rng& rng) {
  return sample(spin_sectors(state, sectors), rng);
}

MixedMeasurementOutcome measure_spin(const DensityMatrix& rho, const SectorDecomposition& sectors, Rng& rng) {
  return sample(spin_sectors(rho, sectors), rng);
}

double integer_class_probability(const StateVector& state, const SectorDecomposition& sectors) {
  return (sectors.class_projector(true) * state).squaredNorm();
}

double integer_class_probability(const DensityMatrix& rho, const SectorDecomposition& sectors) {
  return (sectors.class_projector(true) * rho).trace().real();
}

ClassOutcome measure_spin_class(const StateVector& state, const SectorDecomposition& sectors, Rng& rng) {
  std::vector<ClassOutcome> outcomes;
  for (bool integer : {true, false}) {
    StateVector projected = sectors.class_projector(integer) * state;
    const double prob = projected.squaredNorm();
    if (prob < negligible_probability) continue;
    outcomes.push_back({integer ? SpinClass::integer : SpinClass::half_odd_integer, prob,
                        projected / std::sqrt(prob)});
  }
  return sample(outcomes, rng);
}

MixedClassOutcome measure_spin_class(const DensityMatrix& rho, const SectorDecomposition& sectors, Rng& rng) {
  std::vector<MixedClassOutcome> outcomes;
  for (bool integer : {true, false}) {
    const OperatorMatrix& p = sectors.class_projector(integer);
    DensityMatrix post = p * rho * p;
    const double prob = post.trace().real();
    if (prob < negligible_probability) continue;
    outcomes.push_back({integer ? SpinClass::integer : SpinClass::half_odd_integer, prob, post / prob});
  }
  return sample(outcomes, rng);
}

}  // namespace edgewire
