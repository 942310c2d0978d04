// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/analysis.hpp"

#include <cmath>

#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/qam.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {
namespace {

/// Circulant (1/K) F_K diag(w) F_K^H; its first column is (1/K) dft(w).
CMat circulant_from_window(const CVec& w) {
    const int k = static_cast<int>(w.size());
    CVec c = dft(w) / static_cast<double>(k);
    CMat out(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) out(i, j) = c[((i - j) % k + k) % k];
    return out;
}

}  // namespace

EffectiveMatrices effective_matrices(const ReceiverSpec& spec, const ChannelRealization& chan,
                                     const WindowMatrix& w_tx, const GfdmParams& params) {
    const EqualizerBank bank = make_equalizer(spec, chan, w_tx, params);
    const WindowMatrix w_rx = receive_window(spec, chan, w_tx, params);
    const int m_count = params.subsymbols;
    EffectiveMatrices eff;
    eff.conv.reserve(static_cast<size_t>(m_count));
    eff.noise.reserve(static_cast<size_t>(m_count));
    for (int m = 0; m < m_count; ++m) {
        const CMat mod = circulant_from_window(w_tx.w.col(m));
        const CMat demod = circulant_from_window(w_rx.w.col(m));
        CMat noise_m;
        if (bank.diagonal) {
            noise_m = demod * bank.diag_gains.col(m).asDiagonal();
        } else {
            noise_m = demod * bank.per_m[static_cast<size_t>(m)];
        }
        eff.conv.push_back(noise_m * chan.per_m_diag.col(m).asDiagonal() * mod);
        eff.noise.push_back(std::move(noise_m));
    }
    return eff;
}

CVec overall_gains(const EffectiveMatrices& eff, const GfdmParams& params) {
    const int k_count = params.subcarriers;
    CVec gains = CVec::Zero(k_count);
    for (const CMat& c : eff.conv) gains += c.diagonal();
    return gains / static_cast<double>(params.subsymbols);
}

SinrGrid closed_form_sinr(const EffectiveMatrices& eff, double symbol_energy, double noise_var,
                          const GfdmParams& params) {
    const int k_count = params.subcarriers;
    const int m_count = params.subsymbols;
    const double sigma2_fd = params.block_len() * noise_var;
    const CVec gains = overall_gains(eff, params);

    SinrGrid grid;
    grid.signal.resize(k_count, m_count);
    grid.isi.resize(k_count, m_count);
    grid.ici.resize(k_count, m_count);
    grid.noise.resize(k_count, m_count);
    grid.sinr.resize(k_count, m_count);

    for (int k = 0; k < k_count; ++k) {
        double diag_power = 0.0, row_power = 0.0, noise_rows = 0.0;
        for (int m = 0; m < m_count; ++m) {
            diag_power += std::norm(eff.conv[static_cast<size_t>(m)](k, k));
            row_power += eff.conv[static_cast<size_t>(m)].row(k).squaredNorm();
            noise_rows += eff.noise[static_cast<size_t>(m)].row(k).squaredNorm();
        }
        const double signal = symbol_energy * std::norm(gains[k]);
        const double isi = symbol_energy / m_count * diag_power - signal;
        const double ici = symbol_energy / m_count * (row_power - diag_power);
        const double noise = sigma2_fd / (m_count * static_cast<double>(m_count)) * noise_rows;
        // The components are nonnegative up to roundoff; a cancelled-to-zero
        // denominator (noiseless ZF) maps to +inf.
        const double denom = std::max(isi + ici + noise, 0.0);
        const double sinr = signal / denom;
        for (int m = 0; m < m_count; ++m) {
            grid.signal(k, m) = signal;
            grid.isi(k, m) = isi;
            grid.ici(k, m) = ici;
            grid.noise(k, m) = noise;
            grid.sinr(k, m) = sinr;
        }
    }
    return grid;
}

double analytic_ser_qam(double sinr, int order) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (order < 4 || side * side != order)
        throw std::invalid_argument("analytic_ser_qam: order must be a perfect square >= 4");
    if (sinr < 0.0) {
        if (sinr < -1e-9) throw std::invalid_argument("analytic_ser_qam: negative SINR");
        sinr = 0.0;
    }
    const double q = 0.5 * std::erfc(std::sqrt(3.0 * sinr / (order - 1)) / std::sqrt(2.0));
    const double p_axis = 2.0 * (side - 1) / static_cast<double>(side) * q;
    return 1.0 - (1.0 - p_axis) * (1.0 - p_axis);
}

double mean_analytic_ser(const SinrGrid& grid, int order) {
    double acc = 0.0;
    for (Eigen::Index m = 0; m < grid.sinr.cols(); ++m)
        for (Eigen::Index k = 0; k < grid.sinr.rows(); ++k)
            acc += analytic_ser_qam(grid.sinr(k, m), order);
    return acc / static_cast<double>(grid.sinr.size());
}

EmpiricalSer empirical_ser(const ReceiverSpec& spec, const ChannelRealization& chan,
                           const WindowMatrix& w_tx, const GfdmParams& params,
                           std::int64_t n_symbols, int order, Rng& rng) {
    const int n = params.block_len();
    if (n_symbols < n)
        throw std::invalid_argument("empirical_ser: need at least one full block of symbols");
    const std::int64_t blocks = (n_symbols + n - 1) / n;

    const QamConstellation qam(order, spec.symbol_energy);
    const EqualizerBank bank = make_equalizer(spec, chan, w_tx, params);
    const WindowMatrix w_rx = receive_window(spec, chan, w_tx, params);
    const CVec gains = overall_gains(effective_matrices(spec, chan, w_tx, params), params);

    EmpiricalSer result;
    result.errors = Eigen::MatrixXi::Zero(params.subcarriers, params.subsymbols);
    Eigen::MatrixXi tx_idx(params.subcarriers, params.subsymbols);
    CMat d(params.subcarriers, params.subsymbols);
    for (std::int64_t b = 0; b < blocks; ++b) {
        for (int m = 0; m < params.subsymbols; ++m)
            for (int k = 0; k < params.subcarriers; ++k) {
                tx_idx(k, m) = rng.below(order);
                d(k, m) = qam.point(tx_idx(k, m));
            }
        const CVec x = idft(modulate_fd(d, w_tx, params));
        const CVec y = apply_channel_cp(x, chan, params.cp_len, spec.noise_var, rng);
        const CVec y_eq = apply_equalizer(bank, dft(y), params);
        const CMat d_hat = demodulate_fd(y_eq, w_rx, params);
        for (int m = 0; m < params.subsymbols; ++m)
            for (int k = 0; k < params.subcarriers; ++k)
                if (qam.hard_decision(d_hat(k, m) / gains[k]) != tx_idx(k, m))
                    ++result.errors(k, m);
    }
    result.symbols = blocks * n;
    result.ser = static_cast<double>(result.errors.sum()) / static_cast<double>(result.symbols);
    return result;
}

RMat empirical_sinr(const ReceiverSpec& spec, const ChannelRealization& chan,
                    const WindowMatrix& w_tx, const GfdmParams& params, int n_blocks, int order,
                    Rng& rng) {
    if (n_blocks < 100)
        throw std::invalid_argument("empirical_sinr: need at least 100 blocks");
    const QamConstellation qam(order, spec.symbol_energy);
    const EqualizerBank bank = make_equalizer(spec, chan, w_tx, params);
    const WindowMatrix w_rx = receive_window(spec, chan, w_tx, params);

    CMat cross = CMat::Zero(params.subcarriers, params.subsymbols);
    RMat data_power = RMat::Zero(params.subcarriers, params.subsymbols);
    RMat est_power = RMat::Zero(params.subcarriers, params.subsymbols);
    for (int b = 0; b < n_blocks; ++b) {
        const CMat d = draw_qam_grid(qam, params, rng);
        const CVec x = idft(modulate_fd(d, w_tx, params));
        const CVec y = apply_channel_cp(x, chan, params.cp_len, spec.noise_var, rng);
        const CVec y_eq = apply_equalizer(bank, dft(y), params);
        const CMat d_hat = demodulate_fd(y_eq, w_rx, params);
        cross += d_hat.cwiseProduct(d.conjugate());
        data_power += d.cwiseAbs2();
        est_power += d_hat.cwiseAbs2();
    }
    RMat sinr(params.subcarriers, params.subsymbols);
    for (int m = 0; m < params.subsymbols; ++m)
        for (int k = 0; k < params.subcarriers; ++k) {
            const double signal_proj = std::norm(cross(k, m)) / data_power(k, m);
            // Nonnegative by Cauchy-Schwarz; clamp the cancellation error in
            // the noiseless case.
            const double residual =
                std::max((est_power(k, m) - signal_proj) / n_blocks, 0.0);
            const double gain2 = signal_proj / data_power(k, m);
            sinr(k, m) = gain2 * spec.symbol_energy / residual;
        }
    return sinr;
}

}  // namespace gfdm
