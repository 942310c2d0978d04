// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gfdm/analysis.hpp"
#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"

using namespace gfdm;

namespace {

struct Setup {
    GfdmParams params;
    PrototypePulse pulse;
    WindowMatrix w_tx;
};

Setup make_setup(int k, int m, double alpha, PulseKind kind = PulseKind::PeriodicRc) {
    Setup s{GfdmParams::make(k, m, std::min(k * m - 1, 8)), {}, {}};
    s.pulse = make_pulse(kind, s.params, alpha);
    s.w_tx = compute_tx_window(s.pulse, s.params);
    return s;
}

ChannelRealization flat_channel(const GfdmParams& p) {
    CVec delta(1);
    delta << cplx(1, 0);
    return make_channel(delta, p);
}

}  // namespace

TEST_CASE("zf-zf effective response is the identity") {
    Rng rng(51);
    const Setup s = make_setup(4, 3, 0.5);
    const ChannelRealization chan =
        draw_channel({3, PdpKind::Exponential, 1.0, true}, s.params, rng);
    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, 0.1);
    const EffectiveMatrices eff = effective_matrices(spec, chan, s.w_tx, s.params);
    for (const CMat& c : eff.conv)
        CHECK((c - CMat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);

    const SinrGrid grid = closed_form_sinr(eff, 1.0, 0.1, s.params);
    CHECK(grid.isi.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(grid.ici.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(grid.noise.minCoeff() > 0.0);
    // sinr varies only with the subcarrier index.
    for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 3; ++m) CHECK(grid.sinr(k, m) == grid.sinr(k, 0));
}

TEST_CASE("flat channel zf-zf noise block inverts the modulator block") {
    const Setup s = make_setup(4, 3, 0.5);
    const ChannelRealization chan = flat_channel(s.params);
    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, 0.1);
    const EffectiveMatrices eff = effective_matrices(spec, chan, s.w_tx, s.params);
    const CMat f = dft_matrix(4);
    for (int m = 0; m < 3; ++m) {
        const CMat mod =
            f * s.w_tx.w.col(m).asDiagonal() * f.adjoint() / 4.0;
        CHECK((eff.noise[static_cast<size_t>(m)] - mod.partialPivLu().inverse())
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }
}

TEST_CASE("diag-lmmse-zf tends to identity as noise vanishes") {
    Rng rng(52);
    const Setup s = make_setup(4, 3, 0.5);
    const ChannelRealization chan =
        draw_channel({3, PdpKind::Uniform, 0.0, true}, s.params, rng);
    const ReceiverSpec spec = parse_receiver("diag-lmmse-zf", 1.0, 1e-12);
    const EffectiveMatrices eff = effective_matrices(spec, chan, s.w_tx, s.params);
    for (const CMat& c : eff.conv)
        CHECK((c - CMat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("flat channel with an orthogonal pulse gives SINR = Es/sigma2 everywhere") {
    const Setup s = make_setup(8, 4, 0.0);
    const ChannelRealization chan = flat_channel(s.params);
    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, 0.1);
    const SinrGrid grid = closed_form_sinr(effective_matrices(spec, chan, s.w_tx, s.params),
                                           1.0, 0.1, s.params);
    CHECK((grid.sinr.array() - 10.0).abs().maxCoeff() < 1e-9);
}

TEST_CASE("closed-form SINR matches the Monte-Carlo estimator") {
    Rng rng(53);
    const Setup s = make_setup(8, 4, 0.6);
    const ChannelRealization chan =
        draw_channel({3, PdpKind::Exponential, 1.0, true}, s.params, rng);
    const ReceiverSpec spec = parse_receiver("diag-lmmse-zf", 1.0, 0.05);
    const SinrGrid grid = closed_form_sinr(effective_matrices(spec, chan, s.w_tx, s.params),
                                           1.0, 0.05, s.params);
    CHECK(grid.signal.minCoeff() >= -1e-12);
    CHECK(grid.isi.minCoeff() >= -1e-12);
    CHECK(grid.ici.minCoeff() >= -1e-12);
    CHECK(grid.noise.minCoeff() >= -1e-12);
    Rng mc(54);
    const RMat est = empirical_sinr(spec, chan, s.w_tx, s.params, 10000, 16, mc);
    for (int k = 0; k < 8; ++k) {
        const double pooled = est.row(k).mean();  // SINR is m-independent
        CHECK(std::abs(pooled - grid.sinr(k, 0)) / grid.sinr(k, 0) < 0.03);
    }
}

TEST_CASE("analytic QAM symbol error rate") {
    CHECK(analytic_ser_qam(0.0, 16) == doctest::Approx(0.9375).epsilon(1e-12));
    // High-precision oracle values (erfc evaluated at 40 digits).
    CHECK(std::abs(analytic_ser_qam(10.0, 16) - 0.22203085027243793) < 1e-12);
    CHECK(std::abs(analytic_ser_qam(20.0, 16) - 0.06708586671130360) < 1e-12);
    CHECK(std::abs(analytic_ser_qam(10.0, 4) - 0.0015647896369452098) < 1e-12);
    CHECK(analytic_ser_qam(1e12, 16) < 1e-30);
    CHECK(analytic_ser_qam(std::numeric_limits<double>::infinity(), 16) == 0.0);

    double prev = 1.0;
    for (int i = 0; i < 1000; ++i) {
        const double sinr = std::pow(10.0, -2.0 + 6.0 * i / 999.0);
        const double ser = analytic_ser_qam(sinr, 16);
        CHECK(ser <= prev + 1e-15);
        CHECK(ser >= 0.0);
        CHECK(ser <= 1.0);
        prev = ser;
    }
    CHECK_THROWS_AS(analytic_ser_qam(1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(analytic_ser_qam(-1.0, 16), std::invalid_argument);
}

TEST_CASE("empirical SER is zero without noise") {
    Rng rng(55);
    const Setup s = make_setup(8, 4, 0.6);
    const ChannelRealization chan =
        draw_channel({3, PdpKind::Exponential, 1.0, true}, s.params, rng);
    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, 0.0);
    const EmpiricalSer out = empirical_ser(spec, chan, s.w_tx, s.params, 1000, 16, rng);
    CHECK(out.ser == 0.0);
    CHECK(out.symbols >= 1000);
    CHECK_THROWS_AS(empirical_ser(spec, chan, s.w_tx, s.params, 10, 16, rng),
                    std::invalid_argument);
}

TEST_CASE("empirical SER agrees with the analytic value on a flat channel") {
    const Setup s = make_setup(8, 4, 0.0);
    const ChannelRealization chan = flat_channel(s.params);
    const double sigma2 = 0.1;  // 10 dB
    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, sigma2);
    const double ser_ana = analytic_ser_qam(10.0, 16);
    Rng rng(56);
    const std::int64_t n = 200000;
    const EmpiricalSer out = empirical_ser(spec, chan, s.w_tx, s.params, n, 16, rng);
    const double stderr3 = 3.0 * std::sqrt(ser_ana * (1.0 - ser_ana) / out.symbols);
    CHECK(std::abs(out.ser - ser_ana) < stderr3);
}

TEST_CASE("single-carrier errors are uniform across the block") {
    const GfdmParams params = GfdmParams::make(1, 64, 32);
    const PrototypePulse pulse = make_pulse(PulseKind::RectFd, params);
    const WindowMatrix w_tx = compute_tx_window(pulse, params);
    Rng rng(57);
    const ChannelRealization chan =
        draw_channel({24, PdpKind::Uniform, 0.0, true}, params, rng);
    const ReceiverSpec spec = parse_receiver("diag-lmmse-zf", 1.0, 0.1);
    const EmpiricalSer out = empirical_ser(spec, chan, w_tx, params, 128000, 16, rng);
    const double mean =
        static_cast<double>(out.errors.sum()) / static_cast<double>(out.errors.size());
    REQUIRE(mean > 10.0);  // enough errors for the statistical check
    for (int m = 0; m < 64; ++m)
        CHECK(std::abs(out.errors(0, m) - mean) < 8.0 * std::sqrt(mean));
}

TEST_CASE("empirical SINR estimator sanity") {
    const Setup s = make_setup(4, 3, 0.5);
    Rng rng(58);
    const ChannelRealization chan =
        draw_channel({3, PdpKind::Exponential, 1.0, true}, s.params, rng);

    const ReceiverSpec clean = parse_receiver("zf-zf", 1.0, 0.0);
    const RMat quiet = empirical_sinr(clean, chan, s.w_tx, s.params, 200, 16, rng);
    CHECK(quiet.minCoeff() > 1e8);  // > 80 dB numerical floor

    const ReceiverSpec spec = parse_receiver("zf-zf", 1.0, 0.1);
    const ChannelRealization flat = flat_channel(s.params);
    // alpha=0.5 window is not orthogonal, so use the closed form as reference.
    const SinrGrid ref = closed_form_sinr(effective_matrices(spec, flat, s.w_tx, s.params),
                                          1.0, 0.1, s.params);
    const RMat est = empirical_sinr(spec, flat, s.w_tx, s.params, 10000, 16, rng);
    CHECK(std::abs(est.mean() - ref.sinr.mean()) / ref.sinr.mean() < 0.02);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(est.row(k).mean() - ref.sinr(k, 0)) / ref.sinr(k, 0) < 0.03);

    CHECK_THROWS_AS(empirical_sinr(spec, chan, s.w_tx, s.params, 50, 16, rng),
                    std::invalid_argument);
}

TEST_CASE("joint-LMMSE-equivalent chain dominates zf-zf in SINR") {
    Rng rng(59);
    const Setup s = make_setup(8, 4, 0.6);
    for (int trial = 0; trial < 5; ++trial) {
        const ChannelRealization chan =
            draw_channel({3, PdpKind::Exponential, 1.0, true}, s.params, rng);
        const SinrGrid lmmse = closed_form_sinr(
            effective_matrices(parse_receiver("full-lmmse-zf", 1.0, 0.05), chan, s.w_tx,
                               s.params),
            1.0, 0.05, s.params);
        const SinrGrid zf = closed_form_sinr(
            effective_matrices(parse_receiver("zf-zf", 1.0, 0.05), chan, s.w_tx, s.params),
            1.0, 0.05, s.params);
        for (int k = 0; k < 8; ++k)
            CHECK(lmmse.sinr(k, 0) >= zf.sinr(k, 0) * (1.0 - 1e-9));
    }
}
