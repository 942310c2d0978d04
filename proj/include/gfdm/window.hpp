// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include "gfdm/pulse.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

/// Relative magnitude threshold below which a reciprocal (window entry or
/// frequency-domain channel bin) is treated as singular.
inline constexpr double kSingularEps = 1e-12;

enum class WindowRole { Tx, Rx };

/// K x M elementwise window of the FFT-based modem; the diagonal content of
/// the modulation-matrix factorization.
struct WindowMatrix {
    CMat w;
    WindowRole role = WindowRole::Tx;
};

struct SingularWindowError : std::runtime_error {
    SingularWindowError(int k, int m)
        : std::runtime_error("singular modulator window entry at (k=" + std::to_string(k) +
                             ", m=" + std::to_string(m) + ")"),
          subcarrier(k),
          subsymbol(m) {}
    int subcarrier;
    int subsymbol;
};

/// Modulator window W_tx: per column p, the inverse K-point transform
/// F_K^H of column p of reshape_v(g_fd).
WindowMatrix compute_tx_window(const PrototypePulse& pulse, const GfdmParams& params);

/// Zero-forcing receive window, the elementwise reciprocal of W_tx. Throws
/// SingularWindowError if any entry is below kSingularEps relative to the
/// largest magnitude.
WindowMatrix zf_rx_window(const WindowMatrix& tx);

}  // namespace gfdm
