// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <string>
#include <vector>

#include "gfdm/pulse.hpp"
#include "gfdm/types.hpp"
#include "gfdm/window.hpp"

namespace gfdm {

// ---------------------------------------------------------------------------
// Reference (oracle) paths. Dense matrices are meant for verification and are
// guarded to N <= 4096; the windowed FFT paths below carry production use.
// ---------------------------------------------------------------------------

/// Literal double-sum time-domain modulator,
/// x[n] = sum_{k,m} D(k,m) g[(n - mK) mod N] exp(j 2 pi k n / K).
CVec modulate_reference_td(const CMat& d, const PrototypePulse& pulse, const GfdmParams& params);

/// Dense modulation matrix A with column k + mK holding the (k,m) basis
/// function, so that modulate_reference_td(D) == A * vec(D).
CMat build_modulation_matrix(const PrototypePulse& pulse, const GfdmParams& params);

/// Frequency-domain modulation matrix, the column-wise N-DFT of A.
CMat fd_modulation_matrix(const CMat& a);

// ---------------------------------------------------------------------------
// Windowed FFT modem.
// ---------------------------------------------------------------------------

/// Frequency-domain fast modulator: returns the FD block x_fd with
/// reshape_v(x_fd) = F_K (W_tx o [(1/K) F_K^H D F_M]).
CVec modulate_fd(const CMat& d, const WindowMatrix& w_tx, const GfdmParams& params);

/// Frequency-domain demodulator applied to an equalized FD block:
/// D_hat = (1/M) F_K (W_rx o [(1/K) F_K^H reshape_v(y_eq_fd)]) F_M^H.
CMat demodulate_fd(const CVec& y_eq_fd, const WindowMatrix& w_rx, const GfdmParams& params);

// ---------------------------------------------------------------------------
// Unitary factorization of the FD modulation matrix,
//   A_fd = V_f diag(lambda_tx) U_t,   lambda_tx = sqrt(M) vec(W_tx),
// with V_f, U_t products of commutation permutations and block DFTs. The
// factors are applied through index maps and FFTs; dense copies exist for the
// verification suite only.
// ---------------------------------------------------------------------------

struct GfdmMatrixFactors {
    GfdmParams params;
    CVec lambda_tx;

    /// A_fd * d through the factor chain.
    CVec apply_tx(const CVec& d) const;
    /// B_fd^H * y with B_fd the receive-side factorization built from
    /// lambda_rx = (1/sqrt(M)) vec(W_rx); equals demodulate_fd on vec form.
    CVec apply_rx_adjoint(const CVec& y_eq_fd, const WindowMatrix& w_rx) const;

    CMat dense_vf() const;
    CMat dense_ut() const;
};

GfdmMatrixFactors build_factors(const WindowMatrix& w_tx, const GfdmParams& params);

// Debug dump of complex matrices: two little-endian uint32 dims followed by
// row-major interleaved float32 re/im pairs.
void dump_matrix_c64(const std::string& path, const CMat& m);
CMat load_matrix_c64(const std::string& path);

}  // namespace gfdm
