// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <cstdint>

#include "gfdm/types.hpp"

namespace gfdm {

/// SplitMix-style seed derivation. Every Monte-Carlo stream is keyed by
/// (master seed, tag, channel index, block index) so results do not depend on
/// worker count or execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Deterministic xoshiro256** stream with Box-Muller normals. Not thread
/// safe; use one instance per stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal.
    double normal();
    /// Zero-mean circular-symmetric complex Gaussian with E|z|^2 = variance.
    cplx zmcsc(double variance);
    /// Uniform integer in [0, n).
    int below(int n);

  private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace gfdm
