// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/modem.hpp"

#include <cstdint>
#include <fstream>
#include <numbers>

#include "gfdm/dft.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {
namespace {

constexpr int kDenseLimit = 4096;

void check_dense(int n, const char* what) {
    if (n > kDenseLimit)
        throw std::invalid_argument(std::string(what) + ": dense path is limited to N <= " +
                                    std::to_string(kDenseLimit));
}

// (1/sqrt(Q)) I_P (x) F_Q applied in place: P contiguous blocks of length Q.
void apply_block_dft(CVec& x, int p, int q, bool forward) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (int b = 0; b < p; ++b) {
        cplx* blk = x.data() + static_cast<ptrdiff_t>(b) * q;
        if (forward) {
            dft_inplace(blk, q);
        } else {
            // F_Q^H == Q * idft
            idft_inplace(blk, q);
            for (int i = 0; i < q; ++i) blk[i] *= static_cast<double>(q);
        }
        for (int i = 0; i < q; ++i) blk[i] *= scale;
    }
}

}  // namespace

CVec modulate_reference_td(const CMat& d, const PrototypePulse& pulse, const GfdmParams& params) {
    check_block_dims(params, d.rows(), d.cols(), "modulate_reference_td");
    check_block_len(params, pulse.g.size(), "modulate_reference_td");
    const int k_count = params.subcarriers;
    const int m_count = params.subsymbols;
    const int n = params.block_len();
    CVec x = CVec::Zero(n);
    for (int i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        for (int k = 0; k < k_count; ++k) {
            const cplx tone =
                std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) * i / k_count);
            for (int m = 0; m < m_count; ++m) {
                const int shift = ((i - m * k_count) % n + n) % n;
                acc += d(k, m) * pulse.g[shift] * tone;
            }
        }
        x[i] = acc;
    }
    return x;
}

CMat build_modulation_matrix(const PrototypePulse& pulse, const GfdmParams& params) {
    check_block_len(params, pulse.g.size(), "build_modulation_matrix");
    const int k_count = params.subcarriers;
    const int m_count = params.subsymbols;
    const int n = params.block_len();
    check_dense(n, "build_modulation_matrix");
    CMat a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < k_count; ++k) {
            const cplx tone =
                std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) * i / k_count);
            for (int m = 0; m < m_count; ++m) {
                const int shift = ((i - m * k_count) % n + n) % n;
                a(i, k + m * k_count) = pulse.g[shift] * tone;
            }
        }
    }
    return a;
}

CMat fd_modulation_matrix(const CMat& a) {
    check_dense(static_cast<int>(a.rows()), "fd_modulation_matrix");
    CMat a_fd = a;
    dft_cols_inplace(a_fd);
    return a_fd;
}

CVec modulate_fd(const CMat& d, const WindowMatrix& w_tx, const GfdmParams& params) {
    check_block_dims(params, d.rows(), d.cols(), "modulate_fd");
    check_block_dims(params, w_tx.w.rows(), w_tx.w.cols(), "modulate_fd window");
    CMat t = d;
    dft_rows_inplace(t);                    // D F_M
    idft_cols_inplace(t);                   // (1/K) F_K^H .
    t.array() *= w_tx.w.array();            // W_tx o .
    dft_cols_inplace(t);                    // F_K .
    return unreshape_v(t);
}

CMat demodulate_fd(const CVec& y_eq_fd, const WindowMatrix& w_rx, const GfdmParams& params) {
    check_block_dims(params, w_rx.w.rows(), w_rx.w.cols(), "demodulate_fd window");
    CMat t = reshape_v(y_eq_fd, params);
    idft_cols_inplace(t);                   // (1/K) F_K^H .
    t.array() *= w_rx.w.array();            // W_rx o .
    dft_cols_inplace(t);                    // F_K .
    idft_rows_inplace(t);                   // (1/M) . F_M^H
    return t;
}

GfdmMatrixFactors build_factors(const WindowMatrix& w_tx, const GfdmParams& params) {
    check_block_dims(params, w_tx.w.rows(), w_tx.w.cols(), "build_factors");
    GfdmMatrixFactors f;
    f.params = params;
    f.lambda_tx = std::sqrt(static_cast<double>(params.subsymbols)) * vec_cols(w_tx.w);
    return f;
}

CVec GfdmMatrixFactors::apply_tx(const CVec& d) const {
    check_block_len(params, d.size(), "GfdmMatrixFactors::apply_tx");
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    // U_t = U_{M,K}^H P_{M,K} U_{K,M} P_{K,M}
    CVec t = apply_perm(commutation_perm(k, m), d);
    apply_block_dft(t, k, m, true);
    t = apply_perm(commutation_perm(m, k), t);
    apply_block_dft(t, m, k, false);
    // diag(lambda_tx)
    t.array() *= lambda_tx.array();
    // V_f = P_{K,M} U_{M,K}
    apply_block_dft(t, m, k, true);
    return apply_perm(commutation_perm(k, m), t);
}

CVec GfdmMatrixFactors::apply_rx_adjoint(const CVec& y_eq_fd, const WindowMatrix& w_rx) const {
    check_block_len(params, y_eq_fd.size(), "GfdmMatrixFactors::apply_rx_adjoint");
    check_block_dims(params, w_rx.w.rows(), w_rx.w.cols(), "GfdmMatrixFactors::apply_rx_adjoint");
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    const CVec lambda_rx =
        vec_cols(w_rx.w) / std::sqrt(static_cast<double>(params.subsymbols));
    // B_fd^H = U_t^H diag(lambda_rx) V_f^H with
    // V_f^H = U_{M,K}^H P_{M,K} and U_t^H = P_{M,K} U_{K,M}^H P_{K,M} U_{M,K}.
    CVec t = apply_perm(commutation_perm(m, k), y_eq_fd);
    apply_block_dft(t, m, k, false);
    t.array() *= lambda_rx.array();
    apply_block_dft(t, m, k, true);
    t = apply_perm(commutation_perm(k, m), t);
    apply_block_dft(t, k, m, false);
    return apply_perm(commutation_perm(m, k), t);
}

CMat GfdmMatrixFactors::dense_vf() const {
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    const int n = params.block_len();
    check_dense(n, "GfdmMatrixFactors::dense_vf");
    CMat vf(n, n);
    for (int j = 0; j < n; ++j) {
        CVec e = CVec::Zero(n);
        e[j] = 1.0;
        apply_block_dft(e, m, k, true);
        vf.col(j) = apply_perm(commutation_perm(k, m), e);
    }
    return vf;
}

CMat GfdmMatrixFactors::dense_ut() const {
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    const int n = params.block_len();
    check_dense(n, "GfdmMatrixFactors::dense_ut");
    CMat ut(n, n);
    for (int j = 0; j < n; ++j) {
        CVec e = CVec::Zero(n);
        e[j] = 1.0;
        e = apply_perm(commutation_perm(k, m), e);
        apply_block_dft(e, k, m, true);
        e = apply_perm(commutation_perm(m, k), e);
        apply_block_dft(e, m, k, false);
        ut.col(j) = e;
    }
    return ut;
}

void dump_matrix_c64(const std::string& path, const CMat& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("dump_matrix_c64: cannot open " + path);
    const std::uint32_t dims[2] = {static_cast<std::uint32_t>(m.rows()),
                                   static_cast<std::uint32_t>(m.cols())};
    out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const float re = static_cast<float>(m(r, c).real());
            const float im = static_cast<float>(m(r, c).imag());
            out.write(reinterpret_cast<const char*>(&re), sizeof(float));
            out.write(reinterpret_cast<const char*>(&im), sizeof(float));
        }
    if (!out) throw std::runtime_error("dump_matrix_c64: write failed for " + path);
}

CMat load_matrix_c64(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_matrix_c64: cannot open " + path);
    std::uint32_t dims[2];
    in.read(reinterpret_cast<char*>(dims), sizeof(dims));
    if (!in) throw std::runtime_error("load_matrix_c64: truncated header in " + path);
    CMat m(dims[0], dims[1]);
    for (std::uint32_t r = 0; r < dims[0]; ++r)
        for (std::uint32_t c = 0; c < dims[1]; ++c) {
            float re, im;
            in.read(reinterpret_cast<char*>(&re), sizeof(float));
            in.read(reinterpret_cast<char*>(&im), sizeof(float));
            m(r, c) = cplx(re, im);
        }
    if (!in) throw std::runtime_error("load_matrix_c64: truncated data in " + path);
    return m;
}

}  // namespace gfdm
