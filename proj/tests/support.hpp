// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "edgewire/fock.hpp"
#include "edgewire/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace edgewire::testing {

// Mode indices of the (c, a, b) layout.
enum : int { cu = 0, cd = 1, au = 2, ad = 3, bu = 4, bd = 5 };

// A sum of creator strings acting on |0>, kept unordered. Written
// independently of the library so it can serve as an oracle.
struct Poly {
  struct Term {
    Complex coeff;
    std::vector<int> creators;  // leftmost acts last
  };
  std::vector<Term> terms;

  static Poly one() { return {{{Complex(1), {}}}}; }
  static Poly create(int mode) { return {{{Complex(1), {mode}}}}; }

  friend Poly operator+(Poly x, const Poly& y) {
    x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
    return x;
  }
  friend Poly operator-(const Poly& x, const Poly& y) { return x + Complex(-1) * y; }
  friend Poly operator*(Complex s, Poly x) {
    for (auto& t : x.terms) t.coeff *= s;
    return x;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& tx : x.terms)
      for (const auto& ty : y.terms) {
        Term t{tx.coeff * ty.coeff, tx.creators};
        t.creators.insert(t.creators.end(), ty.creators.begin(), ty.creators.end());
        out.terms.push_back(std::move(t));
      }
    return out;
  }

  // Sorts every string into ascending order, counting transpositions.
  StateVector state(int num_modes) const {
    StateVector v = StateVector::Zero(Eigen::Index(1) << num_modes);
    for (const auto& t : terms) {
      auto c = t.creators;
      int swaps = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j + 1 < c.size() - i; ++j)
          if (c[j] > c[j + 1]) {
            std::swap(c[j], c[j + 1]);
            ++swaps;
          }
      if (std::adjacent_find(c.begin(), c.end()) != c.end()) continue;
      std::uint32_t mask = 0;
      for (int m : c) mask |= 1u << m;
      v(mask) += (swaps % 2 ? -1.0 : 1.0) * t.coeff;
    }
    return v;
  }
};

inline Poly C(int mode) { return Poly::create(mode); }

inline double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Largest amplitude difference once the global phase of y is matched to x.
inline double phase_free_distance(const StateVector& x, const StateVector& y) {
  const Complex ov = y.dot(x);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1);
  return (x - phase * y).cwiseAbs().maxCoeff();
}

inline std::complex<double> gaussian(Rng& rng) {
  double u1 = rng.uniform();
  while (u1 <= 0) u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double r = std::sqrt(-2 * std::log(u1));
  return {r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)};
}

}  // namespace edgewire::testing
