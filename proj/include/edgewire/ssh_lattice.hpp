// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ssh_lattice.hpp
 * @brief Odd-site alternating-bond tight-binding chain.
 *
 * Sites are labelled 1..2L+1. Bond (2m-1, 2m) carries t' and bond
 * (2m, 2m+1) carries t. The hopping is spin independent, so one spinless
 * matrix describes both spin species (every level is two-fold degenerate).
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgewire {

template <typename Real = double>
struct BasicWireParams {
  int num_sites = 3;
  Real t = 1;
  Real t_prime = 0;

  int half_length() const { return (num_sites - 1) / 2; }

  void validate() const {
    if (num_sites % 2 == 0) throw std::invalid_argument("num_sites must be odd");
    if (num_sites < 3) throw std::invalid_argument("num_sites must be >= 3");
    if (!std::isfinite(t) || !(t > 0)) throw std::invalid_argument("t must be finite and > 0");
    if (!std::isfinite(t_prime) || t_prime < 0)
      throw std::invalid_argument("t_prime must be finite and >= 0");
  }
};

using WireParams = BasicWireParams<double>;

template <typename Real = double>
struct BasicSingleParticleLevel {
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  Real energy = 0;
  Vector amplitudes;
  /// Band label k in 1..L with the sign of the energy; empty for the zero mode.
  std::optional<int> band_index;
  int spin_degeneracy = 2;
  /// Set when t == t': the zero mode is spread over the whole chain.
  bool delocalized = false;

  bool is_zero_mode() const { return !band_index.has_value(); }
};

using SingleParticleLevel = BasicSingleParticleLevel<double>;

template <typename Real>
Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> build_hamiltonian(const BasicWireParams<Real>& params) {
  params.validate();
  const int n = params.num_sites;
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> h =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  // zero-based index i is site i+1; site s and s+1 share a t' bond when s is odd
  for (int i = 0; i + 1 < n; ++i) {
    const int site = i + 1;
    const Real hop = (site % 2 == 1) ? params.t_prime : params.t;
    h(i, i + 1) = hop;
    h(i + 1, i) = hop;
  }
  return h;
}

/// Closed-form band energy for band k in 1..L (positive branch).
template <typename Real>
Real band_energy(const BasicWireParams<Real>& params, int k) {
  const int half = params.half_length();
  const Real c = std::cos(std::numbers::pi_v<Real> * k / (2 * half + 2));
  const Real d = params.t - params.t_prime;
  return std::sqrt(d * d + 4 * params.t * params.t_prime * c * c);
}

template <typename Real>
std::vector<Real> analytic_spectrum(const BasicWireParams<Real>& params) {
  params.validate();
  const int half = params.half_length();
  std::vector<Real> energies;
  energies.reserve(params.num_sites);
  energies.push_back(Real(0));
  for (int k = 1; k <= half; ++k) {
    const Real e = band_energy(params, k);
    energies.push_back(e);
    energies.push_back(-e);
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

/**
 * Stationary state of band k (1..L) on the conduction (positive) or valence
 * branch, evaluated from the closed-form sine solution.
 */
template <typename Real>
BasicSingleParticleLevel<Real> analytic_level(const BasicWireParams<Real>& params, int k, bool conduction) {
  params.validate();
  const int half = params.half_length();
  if (k < 1 || k > half) throw std::out_of_range("band index k must be in 1..L");
  const Real pi = std::numbers::pi_v<Real>;
  const Real energy = conduction ? band_energy(params, k) : -band_energy(params, k);
  const Real norm = std::sqrt(Real(half + 1));
  const Real q = pi * k / (half + 1);

  BasicSingleParticleLevel<Real> level;
  level.energy = energy;
  level.band_index = conduction ? k : -k;
  level.amplitudes.resize(params.num_sites);
  for (int site = 1; site <= params.num_sites; ++site) {
    const int m = site / 2;
    Real value;
    if (site % 2 == 0) {
      value = std::sin(q * m) / norm;
    } else {
      value = (params.t_prime * std::sin(q * (m + 1)) + params.t * std::sin(q * m)) / (energy * norm);
    }
    level.amplitudes(site - 1) = value;
  }
  return level;
}

/**
 * The unpaired zero-energy state. Odd sites 2n+1 carry (-t'/t)^n with the
 * closed-form normalization; even sites vanish. For t' > t the same
 * expression is evaluated in the reflected form so it cannot overflow.
 */
template <typename Real>
BasicSingleParticleLevel<Real> zero_mode(const BasicWireParams<Real>& params) {
  params.validate();
  const int half = params.half_length();
  const Real r = params.t_prime / params.t;

  BasicSingleParticleLevel<Real> level;
  level.energy = 0;
  level.amplitudes = BasicSingleParticleLevel<Real>::Vector::Zero(params.num_sites);

  if (r == Real(1)) {
    level.delocalized = true;
    const Real a = 1 / std::sqrt(Real(half + 1));
    for (int n = 0; n <= half; ++n) level.amplitudes(2 * n) = (n % 2 == 0) ? a : -a;
    return level;
  }

  if (r < 1) {
    const Real norm = std::sqrt((1 - r * r) / (1 - std::pow(r, 2 * half + 2)));
    for (int n = 0; n <= half; ++n) level.amplitudes(2 * n) = norm * std::pow(-r, n);
  } else {
    const Real s = 1 / r;
    const Real norm = std::sqrt((1 - s * s) / (1 - std::pow(s, 2 * half + 2)));
    for (int n = 0; n <= half; ++n) {
      const Real sign = (n % 2 == 0) ? 1 : -1;
      level.amplitudes(2 * n) = sign * norm * std::pow(s, half - n);
    }
  }
  return level;
}

/// Per-spin probability density of the zero mode, site 1 first.
template <typename Real>
std::vector<Real> zero_mode_density(const BasicWireParams<Real>& params) {
  const auto level = zero_mode(params);
  std::vector<Real> density(params.num_sites);
  for (int i = 0; i < params.num_sites; ++i) density[i] = level.amplitudes(i) * level.amplitudes(i);
  return density;
}

/**
 * Smallest |energy| among the band levels. Approaches |t - t'| from above as
 * L grows, i.e. half of the asymptotic bulk gap 2|t - t'|.
 */
template <typename Real>
Real band_gap(const BasicWireParams<Real>& params) {
  params.validate();
  Real gap = band_energy(params, 1);
  for (int k = 2; k <= params.half_length(); ++k) gap = std::min(gap, band_energy(params, k));
  return gap;
}

/**
 * Numerical eigenpairs sorted by energy; ties are broken by the site-1
 * amplitude. Each eigenvector's sign is fixed so its first entry of
 * magnitude > 1e-12 is positive. The level with the smallest |energy|
 * is tagged as the zero mode; band labels run -1..-L up the valence band
 * and L..1 up the conduction band, matching the analytic k.
 */
template <typename Real>
std::vector<BasicSingleParticleLevel<Real>> numerical_levels(const BasicWireParams<Real>& params) {
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix h = build_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

  const int n = params.num_sites;
  std::vector<BasicSingleParticleLevel<Real>> levels(n);
  for (int i = 0; i < n; ++i) {
    auto& level = levels[i];
    level.energy = solver.eigenvalues()(i);
    level.amplitudes = solver.eigenvectors().col(i);
    for (int s = 0; s < n; ++s) {
      if (std::abs(level.amplitudes(s)) > Real(1e-12)) {
        if (level.amplitudes(s) < 0) level.amplitudes = -level.amplitudes;
        break;
      }
    }
  }
  std::stable_sort(levels.begin(), levels.end(), [](const auto& x, const auto& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    return x.amplitudes(0) < y.amplitudes(0);
  });

  // band labels: valence levels count -L..-1 from the bottom, conduction 1..L from the top
  int zero_pos = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(levels[i].energy) < std::abs(levels[zero_pos].energy)) zero_pos = i;
  for (int i = 0; i < n; ++i) {
    if (i < zero_pos) levels[i].band_index = -(i + 1);
    else if (i > zero_pos) levels[i].band_index = n - i;
    else levels[i].band_index.reset();
  }
  levels[zero_pos].delocalized = params.t == params.t_prime;
  return levels;
}

template <typename Real>
std::vector<Real> numerical_spectrum(const BasicWireParams<Real>& params) {
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix h = build_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<Real>(ev.data(), ev.data() + ev.size());
}

}  // namespace edgewire
