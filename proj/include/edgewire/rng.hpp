// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace edgewire {

/**
 * Seedable generator used for every Born-rule draw. The engine and the
 * bits-to-double mapping are both fully specified, so a seed reproduces the
 * same draws on every platform. Trial i of a run seeded with s uses the
 * stream seeded with s + i.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(seed + trial); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }

  friend bool operator==(const Rng& a, const Rng& b) { return a.engine_ == b.engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace edgewire
