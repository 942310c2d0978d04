// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <string>
#include <vector>

#include "gfdm/types.hpp"

namespace gfdm {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;      // worst deviation observed
    double tolerance = 0.0;
};

/// Desk-scale identity suite: modem path equivalence, the unitary
/// factorization of the FD modulation matrix, the joint-LMMSE equivalences,
/// the orthogonality certificates and the equal-SINR-per-subcarrier
/// property. `inject_window_fault` perturbs the modulator window before the
/// factorization check to prove the harness catches regressions.
std::vector<CheckResult> run_verification(bool inject_window_fault = false);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace gfdm
