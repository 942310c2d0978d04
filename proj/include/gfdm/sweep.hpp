// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include "gfdm/scenario.hpp"

namespace gfdm {

struct SweepStats {
    std::int64_t singular_channels = 0;  // channel draws skipped by ZF chains
};

/// Runs the scenario: one ResultRow per SNR point, channels fanned out to
/// `workers` threads (0 = hardware concurrency). Every random stream is keyed
/// by (seed, purpose, channel, block), so results are identical for any
/// worker count; wall_time_s is the only non-deterministic column.
std::vector<ResultRow> run_sweep(const Scenario& scenario, int workers = 0,
                                 SweepStats* stats = nullptr);

}  // namespace gfdm
