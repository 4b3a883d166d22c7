// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number engine for a handful of spin-1/2 fermion modes.
 *
 * Mode i of a ModeSet is bit i of a basis index. The basis state with bits
 * i1 < i2 < ... < ik set is f+_{i1} f+_{i2} ... f+_{ik} |0>, so creating a
 * fermion in mode i picks up (-1)^(number of occupied modes below i).
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgewire {

enum class Spin : std::uint8_t { up, down };

struct Mode {
  char wire;
  Spin spin;

  friend bool operator==(const Mode&, const Mode&) = default;
  std::string name() const { return std::string(1, wire) + (spin == Spin::up ? "_up" : "_down"); }
};

constexpr Mode up(char wire) { return {wire, Spin::up}; }
constexpr Mode down(char wire) { return {wire, Spin::down}; }

class ModeSet {
 public:
  static constexpr std::size_t max_modes = 16;

  explicit ModeSet(std::vector<Mode> modes) : modes_(std::move(modes)) {
    if (modes_.size() > max_modes) throw std::invalid_argument("at most 16 modes are supported");
    for (std::size_t i = 0; i < modes_.size(); ++i)
      for (std::size_t j = i + 1; j < modes_.size(); ++j)
        if (modes_[i] == modes_[j]) throw std::invalid_argument("duplicate mode " + modes_[i].name());
  }

  /// Both spins of each wire, wire by wire: (w0 up, w0 down, w1 up, ...).
  static ModeSet of_wires(std::initializer_list<char> wires) {
    std::vector<Mode> modes;
    for (char w : wires) {
      modes.push_back(up(w));
      modes.push_back(down(w));
    }
    return ModeSet(std::move(modes));
  }

  /// (c up, c down, a up, a down, b up, b down)
  static ModeSet teleportation() { return of_wires({'c', 'a', 'b'}); }

  std::size_t size() const { return modes_.size(); }
  std::size_t dimension() const { return std::size_t{1} << modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_.at(i); }
  const std::vector<Mode>& modes() const { return modes_; }

  std::size_t index_of(Mode m) const {
    auto it = std::find(modes_.begin(), modes_.end(), m);
    if (it == modes_.end()) throw std::invalid_argument("unknown mode " + m.name());
    return static_cast<std::size_t>(it - modes_.begin());
  }

  bool has_wire(char wire) const {
    return std::any_of(modes_.begin(), modes_.end(), [wire](const Mode& m) { return m.wire == wire; });
  }

  void require_wires(const std::vector<char>& wires) const {
    for (char w : wires)
      if (!has_wire(w)) throw std::invalid_argument(std::string("unknown wire label '") + w + "'");
  }

  /// Bitmask of every mode that belongs to one of the given wires.
  std::uint32_t wire_mask(const std::vector<char>& wires) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < modes_.size(); ++i)
      if (std::find(wires.begin(), wires.end(), modes_[i].wire) != wires.end()) mask |= 1u << i;
    return mask;
  }

  friend bool operator==(const ModeSet&, const ModeSet&) = default;

 private:
  std::vector<Mode> modes_;
};

/// Sign picked up by moving an operator on `mode` past the occupied modes below it.
constexpr int fermion_sign(std::uint32_t occupation, std::size_t mode) {
  const std::uint32_t below = occupation & ((1u << mode) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

template <typename Scalar>
using BasicStateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using BasicOperatorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = std::complex<double>;
using StateVector = BasicStateVector<Complex>;
using DensityMatrix = BasicOperatorMatrix<Complex>;
using OperatorMatrix = BasicOperatorMatrix<Complex>;

template <typename Scalar>
BasicStateVector<Scalar> apply_creation(const BasicStateVector<Scalar>& state, std::size_t mode) {
  BasicStateVector<Scalar> out = BasicStateVector<Scalar>::Zero(state.size());
  const std::uint32_t bit = 1u << mode;
  for (Eigen::Index n = 0; n < state.size(); ++n) {
    const auto occ = static_cast<std::uint32_t>(n);
    if (occ & bit) continue;
    out(occ | bit) += Scalar(fermion_sign(occ, mode)) * state(n);
  }
  return out;
}

template <typename Scalar>
BasicStateVector<Scalar> apply_annihilation(const BasicStateVector<Scalar>& state, std::size_t mode) {
  BasicStateVector<Scalar> out = BasicStateVector<Scalar>::Zero(state.size());
  const std::uint32_t bit = 1u << mode;
  for (Eigen::Index n = 0; n < state.size(); ++n) {
    const auto occ = static_cast<std::uint32_t>(n);
    if (!(occ & bit)) continue;
    out(occ & ~bit) += Scalar(fermion_sign(occ, mode)) * state(n);
  }
  return out;
}

template <typename Scalar>
struct BasicHermitianOperator {
  std::string label;
  BasicOperatorMatrix<Scalar> matrix;
};

using HermitianOperator = BasicHermitianOperator<Complex>;

enum class ObservableKind { number, charge, parity, spin_z, spin_squared };

struct ObservableSpec {
  ObservableKind kind;
  std::vector<char> wires;
};

/**
 * Dense operator algebra over the Fock space of a ModeSet. Creation
 * matrices are built once at construction; every observable is assembled
 * from them.
 */
template <typename Scalar>
class BasicFockSpace {
 public:
  using Vector = BasicStateVector<Scalar>;
  using Matrix = BasicOperatorMatrix<Scalar>;

  static constexpr std::size_t max_dense_modes = 12;

  explicit BasicFockSpace(ModeSet modes) : modes_(std::move(modes)) {
    if (modes_.size() > max_dense_modes)
      throw std::invalid_argument("dense operator storage is limited to 12 modes");
    const auto dim = static_cast<Eigen::Index>(modes_.dimension());
    creation_.reserve(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      Matrix c = Matrix::Zero(dim, dim);
      const std::uint32_t bit = 1u << i;
      for (Eigen::Index n = 0; n < dim; ++n) {
        const auto occ = static_cast<std::uint32_t>(n);
        if (!(occ & bit)) c(occ | bit, n) = Scalar(fermion_sign(occ, i));
      }
      creation_.push_back(std::move(c));
    }
  }

  const ModeSet& modes() const { return modes_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(modes_.dimension()); }
  Matrix identity() const { return Matrix::Identity(dimension(), dimension()); }

  const Matrix& creation(std::size_t mode) const { return creation_.at(mode); }
  const Matrix& creation(Mode m) const { return creation_[modes_.index_of(m)]; }
  Matrix annihilation(std::size_t mode) const { return creation(mode).adjoint(); }
  Matrix annihilation(Mode m) const { return creation(m).adjoint(); }

  Vector vacuum() const {
    Vector v = Vector::Zero(dimension());
    v(0) = Scalar(1);
    return v;
  }

  Vector basis_state(std::uint32_t occupation) const {
    if (occupation >= modes_.dimension()) throw std::out_of_range("occupation out of range");
    Vector v = Vector::Zero(dimension());
    v(occupation) = Scalar(1);
    return v;
  }

  /// f+_{m0} f+_{m1} ... |0>, rightmost operator applied first.
  Vector product_state(std::initializer_list<Mode> creators) const {
    Vector v = vacuum();
    for (auto it = std::rbegin(creators); it != std::rend(creators); ++it) v = creation(*it) * v;
    return v;
  }

  Matrix number(std::size_t mode) const { return creation(mode) * annihilation(mode); }

  Matrix number(char wire) const {
    modes_.require_wires({wire});
    return number(up(wire)) + number(down(wire));
  }

  Matrix number(Mode m) const { return number(modes_.index_of(m)); }

  Matrix total_number() const {
    Matrix n = Matrix::Zero(dimension(), dimension());
    for (std::size_t i = 0; i < modes_.size(); ++i) n += number(i);
    return n;
  }

  /// Sum over wires of (n_up + n_down - 1); an empty edge mode is a hole of charge -1.
  Matrix charge(const std::vector<char>& wires) const {
    modes_.require_wires(wires);
    Matrix q = Matrix::Zero(dimension(), dimension());
    for (char w : wires) q += number(w) - identity();
    return q;
  }

  Matrix parity() const {
    Matrix p = Matrix::Zero(dimension(), dimension());
    for (Eigen::Index n = 0; n < dimension(); ++n)
      p(n, n) = Scalar(std::popcount(static_cast<std::uint32_t>(n)) % 2 == 0 ? 1 : -1);
    return p;
  }

  Matrix spin_z(const std::vector<char>& wires) const {
    modes_.require_wires(wires);
    Matrix sz = Matrix::Zero(dimension(), dimension());
    for (char w : wires) sz += (number(up(w)) - number(down(w))) / Scalar(2);
    return sz;
  }

  /// Total raising operator sum_w f+_{w,up} f_{w,down}.
  Matrix spin_plus(const std::vector<char>& wires) const {
    modes_.require_wires(wires);
    Matrix sp = Matrix::Zero(dimension(), dimension());
    for (char w : wires) sp += creation(up(w)) * annihilation(down(w));
    return sp;
  }

  /// J^2 = Jz^2 + (J+ J- + J- J+)/2 for the summed spin of the wires.
  Matrix spin_squared(const std::vector<char>& wires) const {
    const Matrix sz = spin_z(wires);
    const Matrix sp = spin_plus(wires);
    const Matrix sm = sp.adjoint();
    return sz * sz + (sp * sm + sm * sp) / Scalar(2);
  }

  BasicHermitianOperator<Scalar> observable(const ObservableSpec& spec) const {
    auto joined = [&] {
      std::string s;
      for (char w : spec.wires) s += w;
      return s;
    };
    switch (spec.kind) {
      case ObservableKind::number:
        if (spec.wires.size() != 1) throw std::invalid_argument("number() takes exactly one wire");
        return {"number(" + joined() + ")", number(spec.wires.front())};
      case ObservableKind::charge:
        return {"charge(" + joined() + ")", charge(spec.wires)};
      case ObservableKind::parity:
        return {"parity", parity()};
      case ObservableKind::spin_z:
        return {"spin_z(" + joined() + ")", spin_z(spec.wires)};
      case ObservableKind::spin_squared:
        return {"spin_squared(" + joined() + ")", spin_squared(spec.wires)};
    }
    throw std::invalid_argument("unknown observable kind");
  }

  /// Projector onto the Fock states whose modes outside `wires` are empty.
  Matrix restriction_to(const std::vector<char>& wires) const {
    const std::uint32_t outside = ~modes_.wire_mask(wires);
    Matrix p = Matrix::Zero(dimension(), dimension());
    for (Eigen::Index n = 0; n < dimension(); ++n)
      if ((static_cast<std::uint32_t>(n) & outside) == 0) p(n, n) = Scalar(1);
    return p;
  }

 private:
  ModeSet modes_;
  std::vector<Matrix> creation_;
};

using FockSpace = BasicFockSpace<Complex>;

template <typename Scalar>
Scalar inner_product(const BasicStateVector<Scalar>& x, const BasicStateVector<Scalar>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: dimension mismatch");
  return x.dot(y);  // Eigen's dot is conjugate-linear in the first argument
}

template <typename Scalar>
BasicStateVector<Scalar> normalize(const BasicStateVector<Scalar>& x) {
  const auto n = x.norm();
  if (!(n > 0)) throw std::domain_error("cannot normalize the zero vector");
  return x / n;
}

template <typename Scalar, typename Derived>
double expectation(const Eigen::MatrixBase<Derived>& op, const BasicStateVector<Scalar>& state) {
  return std::real(state.dot(op * state));
}

template <typename Scalar>
double expectation(const BasicHermitianOperator<Scalar>& op, const BasicStateVector<Scalar>& state) {
  return expectation(op.matrix, state);
}

/// Tr(op rho) for a density matrix.
template <typename DerivedOp, typename DerivedRho>
double expectation_mixed(const Eigen::MatrixBase<DerivedOp>& op, const Eigen::MatrixBase<DerivedRho>& rho) {
  return std::real((op * rho).trace());
}

template <typename DerivedA, typename DerivedB>
double commutator_norm(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
double anticommutator_norm(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b + b * a).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 1e-12) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Hermitian, unit trace and positive semidefinite within `tol`.
bool is_density_matrix(const DensityMatrix& rho, double tol = 1e-12);

/// |<x|y>| ignoring global phase.
inline double overlap(const StateVector& x, const StateVector& y) { return std::abs(x.dot(y)); }

}  // namespace edgewire
