// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gfdm/rng.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

enum class PdpKind { Exponential, Uniform };

/// Block-fading multipath model: L uncorrelated Rayleigh taps with an
/// exponential or uniform power-delay profile.
struct ChannelModel {
    int taps = 24;
    PdpKind pdp = PdpKind::Exponential;
    double decay_db_per_tap = 1.0;
    bool normalize = true;  // total mean power 1
};

/// Mean tap powers; sums to 1 when the model is normalized.
std::vector<double> pdp_weights(const ChannelModel& model);

struct ChannelRealization {
    CVec h;           // L taps
    CVec h_fd;        // N-point DFT of the zero-padded taps
    CMat per_m_diag;  // reshape_v(h_fd); column m is the diagonal of the m-th FD block
};

ChannelRealization make_channel(const CVec& taps, const GfdmParams& params);
ChannelRealization draw_channel(const ChannelModel& model, const GfdmParams& params, Rng& rng);

/// CP transmission path: prepend the last cp_len samples, convolve linearly
/// with the taps, drop the first cp_len outputs and add complex AWGN of
/// per-sample variance sigma2. Requires cp_len >= L-1 so the result equals
/// the circular convolution.
CVec apply_channel_cp(const CVec& x, const ChannelRealization& chan, int cp_len, double sigma2,
                      Rng& rng);

/// Circular fast path: idft(h_fd o dft(x)) plus time-domain AWGN.
CVec apply_channel_circular(const CVec& x, const ChannelRealization& chan, double sigma2,
                            Rng& rng);

nlohmann::json channel_to_json(const ChannelRealization& chan);
ChannelRealization channel_from_json(const nlohmann::json& j, const GfdmParams& params);

}  // namespace gfdm
