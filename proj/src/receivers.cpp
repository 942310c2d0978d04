// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/receivers.hpp"

#include <cmath>
#include <iostream>

#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {
namespace {

void check_chain(CeqKind ceq, DemodKind demod) {
    if (ceq == CeqKind::FullLmmse && demod == DemodKind::Lmmse)
        throw std::invalid_argument(
            "receiver chain full-lmmse-lmmse is not defined; supported chains: zf-zf, "
            "diag-lmmse-zf, full-lmmse-zf, zf-lmmse");
}

/// Noise variance per FD bin after the unnormalized N-DFT.
double fd_noise_var(const ReceiverSpec& spec, const GfdmParams& params) {
    return static_cast<double>(params.block_len()) * spec.noise_var;
}

void check_channel_invertible(const CVec& h_fd) {
    const double floor = kSingularEps * h_fd.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < h_fd.size(); ++i)
        if (std::abs(h_fd[i]) <= floor) throw SingularChannelError(static_cast<int>(i));
}

EqualizerBank zf_bank(const ChannelRealization& chan) {
    check_channel_invertible(chan.h_fd);
    EqualizerBank bank;
    bank.diagonal = true;
    bank.diag_gains = chan.per_m_diag.cwiseInverse();
    return bank;
}

}  // namespace

ReceiverSpec make_receiver_spec(CeqKind ceq, DemodKind demod, double symbol_energy,
                                double noise_var) {
    check_chain(ceq, demod);
    if (symbol_energy <= 0.0)
        throw std::invalid_argument("ReceiverSpec: symbol energy must be positive");
    if (noise_var < 0.0)
        throw std::invalid_argument("ReceiverSpec: noise variance must be nonnegative");
    return ReceiverSpec{ceq, demod, symbol_energy, noise_var};
}

std::string receiver_name(CeqKind ceq, DemodKind demod) {
    std::string name;
    switch (ceq) {
        case CeqKind::Zf: name = "zf"; break;
        case CeqKind::FullLmmse: name = "full-lmmse"; break;
        case CeqKind::DiagLmmse: name = "diag-lmmse"; break;
    }
    name += (demod == DemodKind::Zf) ? "-zf" : "-lmmse";
    return name;
}

ReceiverSpec parse_receiver(std::string_view name, double symbol_energy, double noise_var) {
    for (CeqKind ceq : {CeqKind::Zf, CeqKind::FullLmmse, CeqKind::DiagLmmse})
        for (DemodKind demod : {DemodKind::Zf, DemodKind::Lmmse}) {
            if (ceq == CeqKind::FullLmmse && demod == DemodKind::Lmmse) continue;
            if (receiver_name(ceq, demod) == name)
                return make_receiver_spec(ceq, demod, symbol_energy, noise_var);
        }
    throw std::invalid_argument("unknown receiver '" + std::string(name) +
                                "'; expected one of zf-zf, diag-lmmse-zf, full-lmmse-zf, "
                                "zf-lmmse");
}

EqualizerBank make_equalizer(const ReceiverSpec& spec, const ChannelRealization& chan,
                             const WindowMatrix& w_tx, const GfdmParams& params) {
    check_chain(spec.ceq, spec.demod);
    check_block_dims(params, chan.per_m_diag.rows(), chan.per_m_diag.cols(), "make_equalizer");
    if (spec.ceq == CeqKind::Zf || spec.noise_var <= 0.0) return zf_bank(chan);

    const int k = params.subcarriers;
    const int m_count = params.subsymbols;
    const double sigma2_fd = fd_noise_var(spec, params);
    const double m_es = m_count * spec.symbol_energy;

    if (spec.ceq == CeqKind::DiagLmmse) {
        EqualizerBank bank;
        bank.diagonal = true;
        bank.diag_gains.resize(k, m_count);
        for (int m = 0; m < m_count; ++m) {
            const double window_power = w_tx.w.col(m).squaredNorm();  // P_m
            const double reg = k * sigma2_fd / (m_es * window_power);
            for (int q = 0; q < k; ++q) {
                const cplx h = chan.per_m_diag(q, m);
                bank.diag_gains(q, m) = std::conj(h) / (std::norm(h) + reg);
            }
        }
        return bank;
    }

    // Full LMMSE: one K x K solve per subsymbol,
    //   E_m = (H_m^H H_m + sigma2_fd R_m^{-1})^{-1} H_m^H,
    //   R_m = (M Es / K) F_K diag(|w_m|^2) F_K^H.
    EqualizerBank bank;
    bank.diagonal = false;
    bank.per_m.reserve(static_cast<size_t>(m_count));
    const CMat f = dft_matrix(k);
    for (int m = 0; m < m_count; ++m) {
        const CVec w = w_tx.w.col(m);
        const double w_max2 = w.cwiseAbs2().maxCoeff();
        CMat r_inv(k, k);
        if (w.cwiseAbs2().minCoeff() > kSingularEps * kSingularEps * w_max2) {
            r_inv = f * (1.0 / (m_es * k) * w.cwiseAbs2().cwiseInverse()).asDiagonal() *
                    f.adjoint();
        } else {
            // Degenerate window column: regularize R_m itself and invert.
            CMat r = (m_es / k) * (f * w.cwiseAbs2().asDiagonal() * f.adjoint());
            const double trace = r.trace().real();
            const double eps = 1e-12 * (trace > 0.0 ? trace / k : m_es);
            r += eps * CMat::Identity(k, k);
            std::cerr << "gfdm: full-lmmse equalizer regularized a singular window column (m="
                      << m << ")\n";
            r_inv = r.partialPivLu().inverse();
        }
        CMat sys = sigma2_fd * r_inv;
        sys += chan.per_m_diag.col(m).cwiseAbs2().asDiagonal();
        CMat rhs = CMat::Zero(k, k);
        rhs.diagonal() = chan.per_m_diag.col(m).conjugate();
        bank.per_m.push_back(sys.partialPivLu().solve(rhs));
    }
    return bank;
}

CVec apply_equalizer(const EqualizerBank& bank, const CVec& y_fd, const GfdmParams& params) {
    check_block_len(params, y_fd.size(), "apply_equalizer");
    CMat v = reshape_v(y_fd, params);
    if (bank.diagonal) {
        v.array() *= bank.diag_gains.array();
    } else {
        for (int m = 0; m < params.subsymbols; ++m)
            v.col(m) = bank.per_m[static_cast<size_t>(m)] * v.col(m);
    }
    return unreshape_v(v);
}

CVec ceq_zf(const CVec& y_fd, const ChannelRealization& chan, const GfdmParams& params) {
    return apply_equalizer(zf_bank(chan), y_fd, params);
}

CVec ceq_full_lmmse(const CVec& y_fd, const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params) {
    ReceiverSpec s = spec;
    s.ceq = CeqKind::FullLmmse;
    s.demod = DemodKind::Zf;
    return apply_equalizer(make_equalizer(s, chan, w_tx, params), y_fd, params);
}

CVec ceq_diag_lmmse(const CVec& y_fd, const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params) {
    ReceiverSpec s = spec;
    s.ceq = CeqKind::DiagLmmse;
    return apply_equalizer(make_equalizer(s, chan, w_tx, params), y_fd, params);
}

WindowMatrix demod_lmmse_window(const ChannelRealization& chan, const WindowMatrix& w_tx,
                                const ReceiverSpec& spec, const GfdmParams& params) {
    check_block_dims(params, w_tx.w.rows(), w_tx.w.cols(), "demod_lmmse_window");
    if (spec.noise_var <= 0.0) return zf_rx_window(w_tx);
    check_channel_invertible(chan.h_fd);
    const double sigma2_fd = fd_noise_var(spec, params);
    const double es_n = spec.symbol_energy * params.block_len();
    CMat w(w_tx.w.rows(), w_tx.w.cols());
    for (int m = 0; m < params.subsymbols; ++m) {
        const double omega = chan.per_m_diag.col(m).cwiseAbs2().cwiseInverse().sum();
        const double reg = sigma2_fd * omega / es_n;
        for (int k = 0; k < params.subcarriers; ++k) {
            const cplx v = w_tx.w(k, m);
            w(k, m) = std::conj(v) / (std::norm(v) + reg);
        }
    }
    return WindowMatrix{std::move(w), WindowRole::Rx};
}

WindowMatrix receive_window(const ReceiverSpec& spec, const ChannelRealization& chan,
                            const WindowMatrix& w_tx, const GfdmParams& params) {
    if (spec.demod == DemodKind::Zf) return zf_rx_window(w_tx);
    return demod_lmmse_window(chan, w_tx, spec, params);
}

CMat run_receiver(const CVec& y_td, const ChannelRealization& chan, const WindowMatrix& w_tx,
                  const ReceiverSpec& spec, const GfdmParams& params) {
    check_block_len(params, y_td.size(), "run_receiver");
    const CVec y_fd = dft(y_td);
    const CVec y_eq = apply_equalizer(make_equalizer(spec, chan, w_tx, params), y_fd, params);
    return demodulate_fd(y_eq, receive_window(spec, chan, w_tx, params), params);
}

namespace oracle {
namespace {

CMat effective_channel(const ChannelRealization& chan, const CMat& a_fd) {
    return chan.h_fd.asDiagonal() * a_fd;
}

}  // namespace

CMat joint_lmmse_filter(const ChannelRealization& chan, const CMat& a_fd,
                        const ReceiverSpec& spec, int form) {
    if (spec.noise_var <= 0.0)
        throw std::invalid_argument("joint_lmmse_filter: needs sigma^2 > 0 (use the ZF path)");
    const int n = static_cast<int>(a_fd.rows());
    const double sigma2_fd = n * spec.noise_var;
    const double es = spec.symbol_energy;
    const CMat g = effective_channel(chan, a_fd);
    if (form == 1) {
        CMat cov = es * (g * g.adjoint());
        cov += sigma2_fd * CMat::Identity(n, n);
        return es * g.adjoint() * cov.partialPivLu().inverse();
    }
    if (form == 2) {
        CMat info = (g.adjoint() * g) / sigma2_fd;
        info += (1.0 / es) * CMat::Identity(n, n);
        return info.partialPivLu().solve(g.adjoint() / sigma2_fd);
    }
    throw std::invalid_argument("joint_lmmse_filter: form must be 1 or 2");
}

CMat joint_lmmse(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                 const ReceiverSpec& spec, const GfdmParams& params) {
    check_block_len(params, y_fd.size(), "joint_lmmse");
    if (spec.noise_var <= 0.0) {
        // Joint ZF limit: d = A_fd^{-1} H^{-1} y.
        check_channel_invertible(chan.h_fd);
        const CVec y_eq = y_fd.cwiseQuotient(chan.h_fd);
        CVec d = a_fd.partialPivLu().solve(y_eq);
        return unvec_cols(d, params.subcarriers, params.subsymbols);
    }
    const CMat w1 = joint_lmmse_filter(chan, a_fd, spec, 1);
    const CMat w2 = joint_lmmse_filter(chan, a_fd, spec, 2);
    const double dev = (w1 - w2).cwiseAbs().maxCoeff();
    const double scale = w1.cwiseAbs().maxCoeff();
    if (dev > 1e-9 * std::max(scale, 1.0))
        throw std::logic_error("joint_lmmse: the two filter forms disagree");
    CVec d = w1 * y_fd;
    return unvec_cols(d, params.subcarriers, params.subsymbols);
}

CMat zf_dense_lmmse_demod(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                          const ReceiverSpec& spec, const GfdmParams& params) {
    check_block_len(params, y_fd.size(), "zf_dense_lmmse_demod");
    check_channel_invertible(chan.h_fd);
    const CVec y_eq = y_fd.cwiseQuotient(chan.h_fd);
    CVec d;
    if (spec.noise_var <= 0.0) {
        d = a_fd.partialPivLu().solve(y_eq);
    } else {
        const int n = static_cast<int>(a_fd.rows());
        const double sigma2_fd = n * spec.noise_var;
        const double es = spec.symbol_energy;
        CMat cov = es * (a_fd * a_fd.adjoint());
        cov += (sigma2_fd * chan.h_fd.cwiseAbs2().cwiseInverse()).asDiagonal();
        d = es * a_fd.adjoint() * cov.partialPivLu().solve(y_eq);
    }
    return unvec_cols(d, params.subcarriers, params.subsymbols);
}

CVec full_lmmse_ceq_dense(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                          const ReceiverSpec& spec) {
    const int n = static_cast<int>(a_fd.rows());
    if (spec.noise_var <= 0.0) {
        check_channel_invertible(chan.h_fd);
        return y_fd.cwiseQuotient(chan.h_fd);
    }
    const double sigma2_fd = n * spec.noise_var;
    const CMat cov_x = spec.symbol_energy * (a_fd * a_fd.adjoint());
    CMat sys = sigma2_fd * cov_x.partialPivLu().inverse();
    sys += chan.h_fd.cwiseAbs2().asDiagonal();
    const CVec rhs = chan.h_fd.conjugate().cwiseProduct(y_fd);
    return sys.partialPivLu().solve(rhs);
}

CMat gamma_rx_dense(const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params) {
    if (spec.noise_var <= 0.0)
        throw std::invalid_argument("gamma_rx_dense: needs sigma^2 > 0");
    check_channel_invertible(chan.h_fd);
    const int n = params.block_len();
    const double sigma2_fd = n * spec.noise_var;
    const GfdmMatrixFactors factors = build_factors(w_tx, params);
    const CMat vf = factors.dense_vf();
    const CVec lambda = factors.lambda_tx;
    const CVec r_vbar = sigma2_fd * chan.h_fd.cwiseAbs2().cwiseInverse();
    CMat inner = vf.adjoint() * (r_vbar / spec.symbol_energy).asDiagonal() * vf;
    inner += lambda.cwiseAbs2().asDiagonal();
    return lambda.conjugate().asDiagonal() * inner.partialPivLu().inverse();
}

}  // namespace oracle
}  // namespace gfdm
