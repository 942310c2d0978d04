// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include "gfdm/types.hpp"

namespace gfdm {

enum class PulseKind {
    PeriodicRc,  // frequency-domain raised-cosine window, roll-off alpha
    RectTd,      // constant time-domain pulse (OFDM with M = 1)
    RectFd,      // constant frequency-domain pulse, i.e. a time-domain delta (SC with K = 1)
    Chirp,       // quadratic-phase pulse on the first K samples
};

const char* pulse_name(PulseKind kind);

/// Unit-energy prototype pulse, held both in time domain (g) and as its
/// N-point DFT (g_fd).
struct PrototypePulse {
    PulseKind kind = PulseKind::RectTd;
    double alpha = 0.0;
    CVec g;
    CVec g_fd;
};

// Periodic raised-cosine construction. The window is the real RC profile
//
//   w(x) = 1                                            for |x| <= M(1-a)/2
//   w(x) = 0.5 (1 + cos(pi (|x| - M(1-a)/2) / (M a)))   for |x| <= M(1+a)/2
//   w(x) = 0                                            otherwise
//
// sampled on the signed DFT grid. For odd M the samples sit at integer bins
// x = l; for even M they sit at half-integer offsets x = l + 1/2. The offset
// keeps the modulator window free of exact zeros (an integer-sampled RC with
// K, M both even lands a 0.5/0.5 pair on opposite window phases and the
// resulting W_tx entry at (K/2, M/2) vanishes, which makes every ZF receiver
// singular). At alpha = 0 both grids degenerate to a flat window on exactly
// M contiguous bins, which is the orthogonal case.
//
// Valid roll-off: 0 <= alpha < 1, and M*alpha > 1 whenever alpha > 0.
PrototypePulse make_pulse(PulseKind kind, const GfdmParams& params, double alpha = 0.0);

}  // namespace gfdm
