// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/gates.hpp"
#include "edgewire/protocol.hpp"
#include "support.hpp"

#include <catch2/catch.hpp>

using namespace edgewire;
using namespace edgewire::testing;

namespace {

const double r2 = 1 / std::sqrt(2.0);

SpinAmplitudes random_g(Rng& rng) {
  Complex g1 = gaussian(rng), g2 = gaussian(rng);
  const double n = std::sqrt(std::norm(g1) + std::norm(g2));
  return {g1 / n, g2 / n};
}

std::vector<GateSpec> all_gates() {
  return {Cnot{'c', 'a'}, Cnot{'a', 'b'}, Hadamard{'c'}, Hadamard{'b'}, IY{'b'}, IY{'a'},
          SpinRotation{'a', flip_matrix()}};
}

}  // namespace

TEST_CASE("CNOT and Hadamard reproduce the written-out states", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_g(rng);
    const Poly c = g.g1 * C(cu) + g.g2 * C(cd);
    const Poly pair = C(au) * C(bd) + C(bu) * C(ad);
    const StateVector psi = (Complex(r2) * c * pair).state(6);

    const StateVector after_cnot = apply_gate(Cnot{'c', 'a'}, psi, space);
    const Poly expected_cnot = Complex(r2) * (g.g1 * C(cu) * pair + g.g2 * C(cd) * (C(ad) * C(bd) + C(bu) * C(au)));
    CHECK((after_cnot - expected_cnot.state(6)).cwiseAbs().maxCoeff() < 1e-15);

    const StateVector after_h = apply_gate(Hadamard{'c'}, after_cnot, space);
    const Poly plus = Complex(r2) * (C(cu) + C(cd));
    const Poly minus = Complex(r2) * (C(cu) - C(cd));
    const Poly expected_h =
        Complex(r2) * (g.g1 * plus * pair + g.g2 * minus * (C(ad) * C(bd) + C(bu) * C(au)));
    CHECK((after_h - expected_h.state(6)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("spin flip on a doubly occupied wire picks up a sign", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  const StateVector pair = space.product_state({up('a'), down('a')});
  CHECK((apply_gate(SpinRotation{'a', flip_matrix()}, pair, space) + pair).norm() < 1e-15);
  CHECK((apply_gate(Cnot{'c', 'a'}, StateVector(space.creation(down('c')) * pair), space) +
         space.creation(down('c')) * pair)
            .norm() < 1e-15);
  CHECK((apply_gate(Hadamard{'a'}, pair, space) + pair).norm() < 1e-15);
}

TEST_CASE("gate unitaries respect superselection", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  const auto charge = space.charge({'c', 'a', 'b'});
  const auto parity = space.parity();
  for (const auto& spec : all_gates()) {
    const auto u = gate_unitary(spec, space);
    CHECK(max_abs(u.adjoint() * u - space.identity()) < 1e-12);
    CHECK(commutator_norm(u, charge) < 1e-12);
    CHECK(commutator_norm(u, parity) < 1e-12);
    for (char w : {'c', 'a', 'b'}) CHECK(commutator_norm(u, space.number(w)) < 1e-12);
  }
}

TEST_CASE("gates leave untouched wires alone", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  for (const auto& spec : all_gates()) {
    const auto u = gate_unitary(spec, space);
    const auto wires = gate_wires(spec);
    for (char w : {'c', 'a', 'b'}) {
      if (std::find(wires.begin(), wires.end(), w) != wires.end()) continue;
      CHECK(commutator_norm(u, space.creation(up(w))) < 1e-14);
      CHECK(commutator_norm(u, space.creation(down(w))) < 1e-14);
    }
  }
}

TEST_CASE("single-wire gate identities", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  const auto h = gate_unitary(Hadamard{'b'}, space);
  CHECK(max_abs(h * h - space.identity()) < 1e-14);
  const auto iy = gate_unitary(IY{'b'}, space);
  CHECK(max_abs(iy * iy * iy * iy - space.identity()) < 1e-14);
  CHECK((iy * space.product_state({up('b')}) - space.product_state({down('b')})).norm() < 1e-15);
  CHECK((iy * space.product_state({down('b')}) + space.product_state({up('b')})).norm() < 1e-15);
  const auto cnot = gate_unitary(Cnot{'c', 'a'}, space);
  CHECK(max_abs(cnot * cnot - space.identity()) < 1e-14);

  SpinMatrix bad = SpinMatrix::Identity();
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(lift_spin_rotation(space, 'a', bad), std::invalid_argument);
  CHECK_THROWS_AS(gate_unitary(Cnot{'a', 'a'}, space), std::invalid_argument);
  CHECK_THROWS(gate_unitary(Hadamard{'z'}, space));
}

TEST_CASE("density-matrix gate application", "[gates]") {
  const FockSpace space(ModeSet::teleportation());
  Rng rng(4);
  StateVector v(64);
  for (auto& x : v) x = gaussian(rng);
  v.normalize();
  const DensityMatrix rho = v * v.adjoint();
  const StateVector w = apply_gate(Cnot{'c', 'a'}, v, space);
  CHECK(max_abs(apply_gate(Cnot{'c', 'a'}, rho, space) - w * w.adjoint()) < 1e-14);
}

TEST_CASE("Bob's corrections recover the spinor", "[gates][protocol]") {
  const FockSpace space(ModeSet::teleportation());
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_g(rng);
    const Complex g1 = g.g1, g2 = g.g2;
    const Poly target = g1 * C(bu) + g2 * C(bd);
    const Poly bp = Complex(r2) * (C(bu) + C(bd));
    const Poly bm = Complex(r2) * (C(bu) - C(bd));
    const Poly t0 = Complex(r2) * (C(cu) * C(ad) + C(cd) * C(au));
    const Poly s0 = Complex(r2) * (C(cu) * C(ad) - C(cd) * C(au));
    const std::vector<std::pair<SpinLabel, std::pair<Poly, Poly>>> branches{
        {SpinLabel::of(1, 1), {C(cu) * C(au), g1 * C(bd) - g2 * C(bu)}},
        {SpinLabel::of(1, 0), {t0, g1 * bm - g2 * bp}},
        {SpinLabel::of(1, -1), {C(cd) * C(ad), g1 * C(bu) + g2 * C(bd)}},
        {SpinLabel::of(0, 0), {s0, g1 * bp + g2 * bm}},
    };
    for (const auto& [label, factors] : branches) {
      StateVector psi = (factors.first * factors.second).state(6);
      for (const auto& gate : bob_correction(label).gates) psi = apply_gate(gate, psi, space);
      CHECK(phase_free_distance(psi, (factors.first * target).state(6)) < 1e-14);
    }
  }
  CHECK_THROWS_AS(bob_correction(SpinLabel::of(0.5, 0.5)), std::invalid_argument);
}
