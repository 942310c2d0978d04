// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/window.hpp"

#include "gfdm/dft.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {

WindowMatrix compute_tx_window(const PrototypePulse& pulse, const GfdmParams& params) {
    check_block_len(params, pulse.g_fd.size(), "compute_tx_window");
    CMat v = reshape_v(pulse.g_fd, params);
    // F_K^H per column == K * idft per column.
    idft_cols_inplace(v);
    v *= static_cast<double>(params.subcarriers);
    return WindowMatrix{std::move(v), WindowRole::Tx};
}

WindowMatrix zf_rx_window(const WindowMatrix& tx) {
    const double floor = kSingularEps * tx.w.cwiseAbs().maxCoeff();
    CMat w(tx.w.rows(), tx.w.cols());
    for (Eigen::Index m = 0; m < tx.w.cols(); ++m)
        for (Eigen::Index k = 0; k < tx.w.rows(); ++k) {
            const cplx v = tx.w(k, m);
            if (std::abs(v) <= floor)
                throw SingularWindowError(static_cast<int>(k), static_cast<int>(m));
            w(k, m) = 1.0 / v;
        }
    return WindowMatrix{std::move(w), WindowRole::Rx};
}

}  // namespace gfdm
