// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <cstdint>
#include <vector>

#include "gfdm/receivers.hpp"
#include "gfdm/rng.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

/// Per-subsymbol effective matrices of a receiver chain: conv[m] is the
/// symbol-to-symbol response (demodulator * equalizer * channel * modulator
/// block) and noise[m] the demodulator * equalizer block acting on FD noise.
struct EffectiveMatrices {
    std::vector<CMat> conv;   // C_m, K x K
    std::vector<CMat> noise;  // E_m, K x K
};

EffectiveMatrices effective_matrices(const ReceiverSpec& spec, const ChannelRealization& chan,
                                     const WindowMatrix& w_tx, const GfdmParams& params);

/// Overall per-subcarrier complex gain A_k = (1/M) sum_m conv[m](k,k); the
/// same gain applies to every subsymbol of subcarrier k.
CVec overall_gains(const EffectiveMatrices& eff, const GfdmParams& params);

/// Per-symbol power decomposition, all in linear scale. Every quantity is
/// independent of the subsymbol index; the full K x M grid is stored for
/// uniform reporting.
struct SinrGrid {
    RMat signal;  // Es |A_k|^2
    RMat isi;
    RMat ici;
    RMat noise;
    RMat sinr;
};

SinrGrid closed_form_sinr(const EffectiveMatrices& eff, double symbol_energy, double noise_var,
                          const GfdmParams& params);

/// Exact SER of square QAM in circular Gaussian noise at the given SINR.
double analytic_ser_qam(double sinr, int order);

/// Grid average of analytic_ser_qam over a SinrGrid.
double mean_analytic_ser(const SinrGrid& grid, int order);

struct EmpiricalSer {
    double ser = 0.0;
    Eigen::MatrixXi errors;  // per (k,m) error counts
    std::int64_t symbols = 0;
};

/// Monte-Carlo SER of the full TX -> CP channel -> RX chain with uniform QAM
/// data and per-subcarrier gain compensation before the hard decision.
EmpiricalSer empirical_ser(const ReceiverSpec& spec, const ChannelRealization& chan,
                           const WindowMatrix& w_tx, const GfdmParams& params,
                           std::int64_t n_symbols, int order, Rng& rng);

/// Monte-Carlo per-symbol SINR: least-squares gain against the known data,
/// then Es |gain|^2 over the residual variance. Requires n_blocks >= 100.
RMat empirical_sinr(const ReceiverSpec& spec, const ChannelRealization& chan,
                    const WindowMatrix& w_tx, const GfdmParams& params, int n_blocks, int order,
                    Rng& rng);

}  // namespace gfdm
