// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/fock.hpp"
#include "edgewire/io.hpp"
#include "support.hpp"

#include <catch2/catch.hpp>

using namespace edgewire;
using namespace edgewire::testing;

TEST_CASE("canonical anticommutation relations", "[fock]") {
  const FockSpace space(ModeSet::teleportation());
  const auto id = space.identity();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& ci = space.creation(i);
      const OperatorMatrix ai = space.annihilation(i);
      const auto& cj = space.creation(j);
      const OperatorMatrix delta = (i == j) ? id : OperatorMatrix::Zero(64, 64);
      CHECK(max_abs(ai * cj + cj * ai - delta) < 1e-14);
      CHECK(max_abs(ci * cj + cj * ci) < 1e-14);
    }
}

TEST_CASE("creator strings match the sorting oracle", "[fock]") {
  const FockSpace space(ModeSet::teleportation());
  CHECK((space.product_state({up('a'), up('c')}) - (C(au) * C(cu)).state(6)).norm() < 1e-15);
  CHECK(space.product_state({up('a'), up('c')})(0b101).real() == -1.0);
  CHECK((space.product_state({down('b'), up('a'), down('c')}) - (C(bd) * C(au) * C(cd)).state(6)).norm() < 1e-15);
  CHECK(space.product_state({up('a'), up('a')}).norm() == 0.0);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto occ = static_cast<std::uint32_t>(rng.uniform() * 64);
    const auto mode = static_cast<std::size_t>(rng.uniform() * 6);
    const StateVector applied = apply_creation(space.basis_state(occ), mode);
    Poly p = C(int(mode));
    Poly rest = Poly::one();
    for (int m = 0; m < 6; ++m)
      if (occ >> m & 1) rest = rest * C(m);
    CHECK((applied - (p * rest).state(6)).norm() < 1e-15);
    CHECK((applied - space.creation(mode) * space.basis_state(occ)).norm() < 1e-15);
  }
}

TEST_CASE("parity anticommutes with single creators", "[fock]") {
  const FockSpace space(ModeSet::teleportation());
  const auto parity = space.parity();
  for (std::size_t i = 0; i < 6; ++i) CHECK(anticommutator_norm(parity, space.creation(i)) < 1e-14);
  CHECK(max_abs(parity * parity - space.identity()) < 1e-14);
}

TEST_CASE("number, charge and spin algebra", "[fock]") {
  const FockSpace space(ModeSet::teleportation());
  const std::vector<char> ab{'a', 'b'};
  const OperatorMatrix na = space.number('a');
  const auto& a_up = space.creation(up('a'));
  CHECK(max_abs(na * a_up - a_up * na - a_up) < 1e-14);
  CHECK(max_abs(space.charge(ab) - (space.number('a') + space.number('b') - 2.0 * space.identity())) < 1e-14);

  const auto jz = space.spin_z(ab);
  const auto jp = space.spin_plus(ab);
  const auto j2 = space.spin_squared(ab);
  CHECK(max_abs(jz * jp - jp * jz - jp) < 1e-14);
  CHECK(commutator_norm(j2, jz) < 1e-14);
  CHECK(commutator_norm(j2, jp) < 1e-14);
  CHECK(commutator_norm(j2, space.charge(ab)) < 1e-14);
  CHECK(is_hermitian(j2));

  const StateVector single = space.product_state({up('c')});
  CHECK(expectation(space.spin_squared({'c'}), single) == Approx(0.75).margin(1e-14));
  CHECK(expectation(space.spin_z({'c'}), single) == Approx(0.5).margin(1e-14));

  const double r = 1 / std::sqrt(2.0);
  const StateVector singlet = (Complex(r) * (C(au) * C(bd) + C(bu) * C(ad))).state(6);
  CHECK(expectation(j2, singlet) == Approx(0.0).margin(1e-14));
  CHECK(expectation(j2, space.product_state({up('a'), up('b')})) == Approx(2.0).margin(1e-14));
  CHECK(expectation(j2, space.product_state({up('a'), down('a')})) == Approx(0.0).margin(1e-14));
}

TEST_CASE("observables by spec", "[fock]") {
  const FockSpace space(ModeSet::teleportation());
  const auto q = space.observable({ObservableKind::charge, {'a', 'b'}});
  CHECK(max_abs(q.matrix - space.charge({'a', 'b'})) == 0.0);
  const auto p = space.observable({ObservableKind::parity, {}});
  CHECK(max_abs(p.matrix - space.parity()) == 0.0);
  CHECK(!q.label.empty());
}

TEST_CASE("mode sets reject bad input", "[fock]") {
  CHECK_THROWS(ModeSet({up('a'), up('a')}));
  CHECK_THROWS(ModeSet::of_wires({'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i'}));
  const auto modes = ModeSet::teleportation();
  CHECK(modes.dimension() == 64);
  CHECK(modes.index_of(down('b')) == 5);
  CHECK_THROWS_AS(modes.require_wires({'z'}), std::invalid_argument);
  CHECK_THROWS(FockSpace(ModeSet::of_wires({'a', 'b', 'c', 'd', 'e', 'f', 'g'})));
}

TEST_CASE("normalization and density-matrix checks", "[fock]") {
  const FockSpace space(ModeSet::of_wires({'a', 'b'}));
  CHECK_THROWS_AS(normalize(StateVector(StateVector::Zero(16))), std::domain_error);
  const StateVector v = normalize(StateVector(space.vacuum() + space.product_state({up('a'), down('b')})));
  CHECK(v.norm() == Approx(1.0).margin(1e-15));
  const DensityMatrix rho = v * v.adjoint();
  CHECK(is_density_matrix(rho));
  CHECK(!is_density_matrix(DensityMatrix(2.0 * rho)));
  CHECK(overlap(v, v) == Approx(1.0).margin(1e-15));
}

TEST_CASE("state JSON round trip", "[fock][io]") {
  const ModeSet modes = ModeSet::teleportation();
  Rng rng(9);
  StateVector v(64);
  for (auto& x : v) x = gaussian(rng);
  v.normalize();
  ModeSet read_modes = ModeSet::of_wires({'a'});
  const StateVector back = state_from_json(state_to_json(v, modes), &read_modes);
  CHECK((back - v).norm() == 0.0);
  CHECK(read_modes.dimension() == 64);
  CHECK(read_modes.index_of(up('b')) == 4);
  CHECK_THROWS(state_to_json(StateVector(StateVector::Zero(8)), modes));
}
