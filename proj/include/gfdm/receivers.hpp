// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfdm/channel.hpp"
#include "gfdm/types.hpp"
#include "gfdm/window.hpp"

namespace gfdm {

// A GFDM-based receiver is a frequency-domain channel equalizer followed by
// the windowed GFDM demodulator. Supported chains: zf-zf, diag-lmmse-zf,
// full-lmmse-zf and zf-lmmse; the full-LMMSE equalizer pairs with ZF
// demodulation only.

enum class CeqKind { Zf, FullLmmse, DiagLmmse };
enum class DemodKind { Zf, Lmmse };

struct ReceiverSpec {
    CeqKind ceq = CeqKind::Zf;
    DemodKind demod = DemodKind::Zf;
    double symbol_energy = 1.0;  // Es
    double noise_var = 0.0;      // sigma^2 per time-domain sample
};

ReceiverSpec make_receiver_spec(CeqKind ceq, DemodKind demod, double symbol_energy,
                                double noise_var);
std::string receiver_name(CeqKind ceq, DemodKind demod);
/// Parses one of "zf-zf", "diag-lmmse-zf", "full-lmmse-zf", "zf-lmmse".
ReceiverSpec parse_receiver(std::string_view name, double symbol_energy, double noise_var);

struct SingularChannelError : std::runtime_error {
    explicit SingularChannelError(int bin_index)
        : std::runtime_error("zero-forcing equalizer hit a singular frequency-domain channel "
                             "bin at index " + std::to_string(bin_index)),
          bin(bin_index) {}
    int bin;
};

/// Per-subsymbol channel equalizer: either one complex gain per FD bin
/// (laid out like reshape_v, column m belongs to the m-th block) or M dense
/// K x K matrices.
struct EqualizerBank {
    bool diagonal = true;
    CMat diag_gains;
    std::vector<CMat> per_m;
};

EqualizerBank make_equalizer(const ReceiverSpec& spec, const ChannelRealization& chan,
                             const WindowMatrix& w_tx, const GfdmParams& params);
CVec apply_equalizer(const EqualizerBank& bank, const CVec& y_fd, const GfdmParams& params);

/// y_fd / h_fd elementwise. Throws SingularChannelError when a bin magnitude
/// falls below kSingularEps relative to the largest bin.
CVec ceq_zf(const CVec& y_fd, const ChannelRealization& chan, const GfdmParams& params);

/// Per-subsymbol LMMSE channel equalizer using the full window covariance,
/// a K x K solve per subsymbol. Falls back to ZF at zero noise.
CVec ceq_full_lmmse(const CVec& y_fd, const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params);

/// Diagonal-constrained LMMSE channel equalizer: per-bin scalar gains using
/// the per-subsymbol window power trace.
CVec ceq_diag_lmmse(const CVec& y_fd, const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params);

/// LMMSE receive window intended to follow ZF channel equalization; per
/// subsymbol the regularizer is the trace of the inverted channel block.
WindowMatrix demod_lmmse_window(const ChannelRealization& chan, const WindowMatrix& w_tx,
                                const ReceiverSpec& spec, const GfdmParams& params);

/// Receive window selected by the chain (ZF reciprocal or LMMSE design).
WindowMatrix receive_window(const ReceiverSpec& spec, const ChannelRealization& chan,
                            const WindowMatrix& w_tx, const GfdmParams& params);

/// Full chain on a time-domain block: DFT -> channel equalizer -> windowed
/// demodulator. Returns the estimated K x M symbol grid.
CMat run_receiver(const CVec& y_td, const ChannelRealization& chan, const WindowMatrix& w_tx,
                  const ReceiverSpec& spec, const GfdmParams& params);

// Dense reference receivers for verification; never part of a production
// chain. All are limited to N <= 4096.
namespace oracle {

/// Joint LMMSE filter W^H on the stacked FD system. form 1 is the
/// covariance form, form 2 the information form; both agree for sigma^2 > 0.
CMat joint_lmmse_filter(const ChannelRealization& chan, const CMat& a_fd,
                        const ReceiverSpec& spec, int form);

/// Joint LMMSE estimate (joint ZF at zero noise). Evaluates both filter
/// forms and cross-checks them before returning the symbol grid.
CMat joint_lmmse(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                 const ReceiverSpec& spec, const GfdmParams& params);

/// ZF channel equalization followed by the dense (non-windowed) LMMSE
/// demodulator for the equalized linear model.
CMat zf_dense_lmmse_demod(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                          const ReceiverSpec& spec, const GfdmParams& params);

/// Dense global LMMSE channel equalizer on the stacked system (the per-m
/// bank reproduces it block by block).
CVec full_lmmse_ceq_dense(const CVec& y_fd, const ChannelRealization& chan, const CMat& a_fd,
                          const ReceiverSpec& spec);

/// Inner matrix of the dense LMMSE demodulator in the factor domain; it is
/// diagonal exactly when that demodulator is realizable as a GFDM window
/// (e.g. for a flat channel).
CMat gamma_rx_dense(const ChannelRealization& chan, const WindowMatrix& w_tx,
                    const ReceiverSpec& spec, const GfdmParams& params);

}  // namespace oracle
}  // namespace gfdm
