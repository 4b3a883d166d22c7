// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/hubbard.hpp"
#include "support.hpp"

#include <catch2/catch.hpp>

using namespace edgewire;
using namespace edgewire::testing;

namespace {

// a/b-only layout: a up, a down, b up, b down
enum : int { Au = 0, Ad = 1, Bu = 2, Bd = 3 };

// Lowest level of the neutral singlet block {singlet, (aa + bb)/sqrt2}.
double oracle_e0(double e2, double lambda) { return e2 / 2 - std::sqrt(e2 * e2 / 4 + 4 * lambda * lambda); }

// |<singlet|ground>| from the same 2x2 block.
double oracle_overlap(double e2, double lambda) { return std::cos(0.5 * std::atan2(4 * lambda, e2)); }

FockSpace pair_space() { return FockSpace(ModeSet::of_wires({'a', 'b'})); }

}  // namespace

TEST_CASE("exact energy matches the two-level closed form", "[hubbard]") {
  const auto space = pair_space();
  for (double e2 : {0.5, 1.0, 3.0})
    for (double lambda : {0.001, 0.01, 0.1, 0.7}) {
      const auto gs = coupling_ground_state({e2, lambda}, space);
      CHECK(gs.energy == Approx(oracle_e0(e2, lambda)).margin(1e-13));
      CHECK(!gs.degenerate);
    }
}

TEST_CASE("perturbative energy and its quartic deviation", "[hubbard]") {
  const auto check = perturbative_check({1.0, 0.01});
  CHECK(check.e0_perturbative == Approx(-4e-4).margin(1e-18));
  CHECK(check.e0_exact == Approx(oracle_e0(1.0, 0.01)).margin(1e-16));
  CHECK(check.deviation == Approx(oracle_e0(1.0, 0.01) + 4e-4).epsilon(1e-6));

  const std::vector<double> lambdas{0.01, 0.005, 0.0025};
  const auto fit = fit_quartic_deviation(1.0, lambdas);
  CHECK(fit.coefficient == Approx(16.0).epsilon(0.01));
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    const double ratio = fit.points[i - 1].deviation / fit.points[i].deviation;
    CHECK(ratio > 16.0 / 1.5);
    CHECK(ratio < 16.0 * 1.5);
  }
  CHECK_THROWS_AS(perturbative_check({0.0, 0.1}), std::invalid_argument);
}

TEST_CASE("ground state is mostly the singlet", "[hubbard]") {
  const auto space = pair_space();
  const StateVector g = (Complex(1 / std::sqrt(2.0)) * (C(Au) * C(Bd) + C(Bu) * C(Ad))).state(4);
  CHECK((singlet_state(space) - g).norm() < 1e-15);
  for (double lambda : {0.005, 0.01, 0.02}) {
    const auto gs = coupling_ground_state({1.0, lambda}, space);
    CHECK(overlap(g, gs.state()) == Approx(oracle_overlap(1.0, lambda)).margin(1e-12));
    CHECK(expectation(space.spin_squared({'a', 'b'}), gs.state()) == Approx(0).margin(1e-12));
    CHECK(inner_product(g, gs.state()).real() > 0);
  }
  const auto report = hubbard_report({1.0, 0.01});
  CHECK(report.singlet_overlap == Approx(oracle_overlap(1.0, 0.01)).margin(1e-12));
}

TEST_CASE("triplet stays at zero energy", "[hubbard]") {
  const auto space = pair_space();
  const auto h = build_h_int({1.0, 0.05}, space);
  for (int m : {1, 0, -1}) {
    const auto t = ground_state(h, space, SectorKey{0, SpinLabel::of(1, m)});
    CHECK(t.energy == Approx(0).margin(1e-14));
  }
  const auto report = hubbard_report({1.0, 0.05});
  CHECK(report.triplet_gap == Approx(-oracle_e0(1.0, 0.05)).margin(1e-14));
  CHECK(report.e0_perturbative.has_value());
  CHECK(report.warnings.empty());
  CHECK(hubbard_report({1.0, 0.2}).warnings.size() == 1);
}

TEST_CASE("cold-atom ground state is the bonding pair", "[hubbard]") {
  const auto space = pair_space();
  const StateVector oracle = (Complex(0.5) * (C(Au) - C(Bu)) * (C(Ad) - C(Bd))).state(4);
  CHECK((bonding_pair_state(space) - oracle).norm() < 1e-15);
  for (double lambda : {0.3, 1.0}) {
    const auto gs = coupling_ground_state({0.0, lambda}, space);
    CHECK(gs.energy == Approx(-2 * lambda).margin(1e-12));
    CHECK(!gs.degenerate);
    CHECK((gs.state() - oracle).cwiseAbs().maxCoeff() < 1e-12);
  }
  const auto report = hubbard_report({0.0, 0.3});
  CHECK(!report.e0_perturbative.has_value());
  CHECK(report.singlet_overlap == Approx(1 / std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("coupling conserves charge, spin and parity", "[hubbard]") {
  const auto space = pair_space();
  const auto h = build_h_int({1.0, 0.3}, space);
  const std::vector<char> ab{'a', 'b'};
  CHECK(is_hermitian(h));
  CHECK(commutator_norm(h, space.charge(ab)) < 1e-14);
  CHECK(commutator_norm(h, space.spin_squared(ab)) < 1e-14);
  CHECK(commutator_norm(h, space.spin_z(ab)) < 1e-14);
  CHECK(commutator_norm(h, space.parity()) < 1e-14);
}

TEST_CASE("coupling is symmetric under a <-> b", "[hubbard]") {
  const auto space = pair_space();
  OperatorMatrix swap = OperatorMatrix::Zero(16, 16);
  const int relabel[4] = {Bu, Bd, Au, Ad};
  for (std::uint32_t occ = 0; occ < 16; ++occ) {
    Poly p = Poly::one();
    for (int m = 0; m < 4; ++m)
      if (occ >> m & 1) p = p * C(relabel[m]);
    swap.col(occ) = p.state(4);
  }
  const auto h = build_h_int({1.0, 0.2}, space);
  CHECK(max_abs(swap * h * swap.adjoint() - h) < 1e-14);
}

TEST_CASE("zero hopping leaves a fourfold ground space", "[hubbard]") {
  const auto space = pair_space();
  const auto gs = coupling_ground_state({1.0, 0.0}, space);
  CHECK(gs.degenerate);
  CHECK(gs.basis.cols() == 4);
  CHECK(gs.energy == Approx(0).margin(1e-15));
  CHECK(max_abs(gs.basis.adjoint() * gs.basis - OperatorMatrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("ground state in a chosen sector", "[hubbard]") {
  const auto space = pair_space();
  const auto h = build_h_int({1.0, 0.01}, space);
  const auto s = ground_state(h, space, SectorKey{0, SpinLabel::of(0, 0)});
  CHECK(s.energy == Approx(oracle_e0(1.0, 0.01)).margin(1e-15));
  CHECK_THROWS_AS(ground_state(h, space, SectorKey{2, SpinLabel::of(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(build_h_int({-1.0, 0.1}, space), std::invalid_argument);
  CHECK_THROWS_AS(build_h_int({1.0, -0.1}, space), std::invalid_argument);
}
