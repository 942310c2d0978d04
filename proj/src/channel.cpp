// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/channel.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "gfdm/dft.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {

std::vector<double> pdp_weights(const ChannelModel& model) {
    if (model.taps < 1) throw std::invalid_argument("pdp_weights: need at least one tap");
    std::vector<double> w(static_cast<size_t>(model.taps), 1.0);
    if (model.pdp == PdpKind::Exponential) {
        for (int l = 0; l < model.taps; ++l)
            w[static_cast<size_t>(l)] = std::pow(10.0, -model.decay_db_per_tap * l / 10.0);
    }
    if (model.normalize) {
        double sum = 0.0;
        for (double v : w) sum += v;
        for (double& v : w) v /= sum;
    }
    return w;
}

ChannelRealization make_channel(const CVec& taps, const GfdmParams& params) {
    if (taps.size() < 1 || taps.size() > params.block_len())
        throw std::invalid_argument("make_channel: need 1 <= L <= N taps");
    ChannelRealization chan;
    chan.h = taps;
    CVec padded = CVec::Zero(params.block_len());
    padded.head(taps.size()) = taps;
    chan.h_fd = dft(padded);
    chan.per_m_diag = reshape_v(chan.h_fd, params);
    return chan;
}

ChannelRealization draw_channel(const ChannelModel& model, const GfdmParams& params, Rng& rng) {
    const std::vector<double> w = pdp_weights(model);
    CVec taps(model.taps);
    for (int l = 0; l < model.taps; ++l) taps[l] = rng.zmcsc(w[static_cast<size_t>(l)]);
    return make_channel(taps, params);
}

CVec apply_channel_cp(const CVec& x, const ChannelRealization& chan, int cp_len, double sigma2,
                      Rng& rng) {
    const int n = static_cast<int>(x.size());
    const int taps = static_cast<int>(chan.h.size());
    if (cp_len < taps - 1)
        throw std::invalid_argument("apply_channel_cp: cp_len must be >= L-1 to cover the "
                                    "channel delay spread");
    CVec ext(cp_len + n);
    ext.head(cp_len) = x.tail(cp_len);
    ext.tail(n) = x;
    CVec y(n);
    for (int i = 0; i < n; ++i) {
        cplx acc(0.0, 0.0);
        const int pos = cp_len + i;
        for (int l = 0; l < taps && l <= pos; ++l) acc += chan.h[l] * ext[pos - l];
        y[i] = acc;
    }
    if (sigma2 > 0.0)
        for (int i = 0; i < n; ++i) y[i] += rng.zmcsc(sigma2);
    return y;
}

CVec apply_channel_circular(const CVec& x, const ChannelRealization& chan, double sigma2,
                            Rng& rng) {
    if (x.size() != chan.h_fd.size())
        throw std::invalid_argument("apply_channel_circular: block length mismatch");
    CVec y = dft(x);
    y.array() *= chan.h_fd.array();
    y = idft(y);
    if (sigma2 > 0.0)
        for (Eigen::Index i = 0; i < y.size(); ++i) y[i] += rng.zmcsc(sigma2);
    return y;
}

nlohmann::json channel_to_json(const ChannelRealization& chan) {
    nlohmann::json taps = nlohmann::json::array();
    for (Eigen::Index l = 0; l < chan.h.size(); ++l)
        taps.push_back({chan.h[l].real(), chan.h[l].imag()});
    return nlohmann::json{{"taps", taps}};
}

ChannelRealization channel_from_json(const nlohmann::json& j, const GfdmParams& params) {
    const auto& taps = j.at("taps");
    CVec h(taps.size());
    for (size_t l = 0; l < taps.size(); ++l)
        h[static_cast<Eigen::Index>(l)] = cplx(taps[l].at(0).get<double>(),
                                               taps[l].at(1).get<double>());
    return make_channel(h, params);
}

}  // namespace gfdm
