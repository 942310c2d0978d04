// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <numbers>

#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/reshape.hpp"
#include "gfdm/rng.hpp"

using namespace gfdm;

namespace {

CMat random_grid(const GfdmParams& p, Rng& rng) {
    CMat d(p.subcarriers, p.subsymbols);
    for (int m = 0; m < p.subsymbols; ++m)
        for (int k = 0; k < p.subcarriers; ++k) d(k, m) = rng.zmcsc(1.0);
    return d;
}

}  // namespace

TEST_CASE("reference modulator basics") {
    const GfdmParams p = GfdmParams::make(2, 2);
    const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, p, 0.6);

    CHECK(modulate_reference_td(CMat::Zero(2, 2), pulse, p).cwiseAbs().maxCoeff() == 0.0);

    CMat d = CMat::Zero(2, 2);
    d(0, 0) = 1.0;
    CHECK((modulate_reference_td(d, pulse, p) - pulse.g).cwiseAbs().maxCoeff() < 1e-14);

    d.setZero();
    d(1, 0) = 1.0;  // k = 1, m = 0: x[n] = g[n] exp(j pi n)
    const CVec x = modulate_reference_td(d, pulse, p);
    for (int n = 0; n < 4; ++n) {
        const cplx expected = pulse.g[n] * std::polar(1.0, std::numbers::pi * n);
        CHECK(std::abs(x[n] - expected) < 1e-14);
    }
}

TEST_CASE("modulation matrix reproduces the reference sum") {
    Rng rng(3);
    const GfdmParams p = GfdmParams::make(4, 3);
    const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, p, 0.5);
    const CMat a = build_modulation_matrix(pulse, p);
    CHECK((a.col(0) - pulse.g).cwiseAbs().maxCoeff() < 1e-14);

    const CMat d = random_grid(p, rng);
    const CVec via_matrix = a * vec_cols(d);
    const CVec via_sum = modulate_reference_td(d, pulse, p);
    CHECK((via_matrix - via_sum).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("OFDM modulation matrix is unitary") {
    const GfdmParams p = GfdmParams::make(16, 1);
    const CMat a = build_modulation_matrix(make_pulse(PulseKind::RectTd, p), p);
    CHECK((a.adjoint() * a - CMat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("fast FD modulator equals the dense FD matrix path") {
    Rng rng(4);
    const GfdmParams p = GfdmParams::make(8, 4);
    const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, p, 0.5);
    const WindowMatrix w_tx = compute_tx_window(pulse, p);

    CHECK(modulate_fd(CMat::Zero(8, 4), w_tx, p).cwiseAbs().maxCoeff() == 0.0);

    const CMat d = random_grid(p, rng);
    const CVec fast = modulate_fd(d, w_tx, p);
    const CMat a_fd = fd_modulation_matrix(build_modulation_matrix(pulse, p));
    const CVec dense = a_fd * vec_cols(d);
    CHECK((fast - dense).norm() / dense.norm() < 1e-9);
}

TEST_CASE("single-carrier FD modulator reduces to a window product") {
    Rng rng(5);
    const GfdmParams p = GfdmParams::make(1, 8);
    const PrototypePulse pulse = make_pulse(PulseKind::RectFd, p);
    const WindowMatrix w_tx = compute_tx_window(pulse, p);
    const CMat d = random_grid(p, rng);
    const CVec fast = modulate_fd(d, w_tx, p);
    CMat spread = d;
    dft_rows_inplace(spread);  // D F_M
    const CVec direct = unreshape_v(w_tx.w.cwiseProduct(spread));
    CHECK((fast - direct).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ZF round trip through the FD modem") {
    Rng rng(6);
    for (auto [k, m, alpha] : {std::tuple{8, 4, 0.5}, {8, 1, 0.0}}) {
        const GfdmParams p = GfdmParams::make(k, m);
        const PrototypePulse pulse =
            make_pulse(m == 1 ? PulseKind::RectTd : PulseKind::PeriodicRc, p, alpha);
        const WindowMatrix w_tx = compute_tx_window(pulse, p);
        const WindowMatrix w_rx = zf_rx_window(w_tx);
        const CMat d = random_grid(p, rng);
        const CMat d_hat = demodulate_fd(modulate_fd(d, w_tx, p), w_rx, p);
        CHECK((d_hat - d).cwiseAbs().maxCoeff() < 1e-9);
    }
    const GfdmParams p = GfdmParams::make(8, 4);
    const WindowMatrix w_rx =
        zf_rx_window(compute_tx_window(make_pulse(PulseKind::PeriodicRc, p, 0.5), p));
    CHECK(demodulate_fd(CVec::Zero(32), w_rx, p).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("modulation is linear") {
    Rng rng(7);
    const GfdmParams p = GfdmParams::make(4, 3);
    const WindowMatrix w_tx =
        compute_tx_window(make_pulse(PulseKind::PeriodicRc, p, 0.5), p);
    const CMat d1 = random_grid(p, rng);
    const CMat d2 = random_grid(p, rng);
    const cplx a = rng.zmcsc(1.0), b = rng.zmcsc(1.0);
    const CVec combined = modulate_fd(a * d1 + b * d2, w_tx, p);
    const CVec split = a * modulate_fd(d1, w_tx, p) + b * modulate_fd(d2, w_tx, p);
    CHECK((combined - split).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("orthogonal configurations conserve power") {
    Rng rng(8);
    struct Config { PulseKind kind; int k, m; };
    for (const Config& c : {Config{PulseKind::PeriodicRc, 8, 4}, {PulseKind::Chirp, 8, 4},
                            {PulseKind::RectTd, 8, 1}, {PulseKind::RectFd, 1, 8}}) {
        const GfdmParams p = GfdmParams::make(c.k, c.m);
        const PrototypePulse pulse = make_pulse(c.kind, p, 0.0);
        const WindowMatrix w_tx = compute_tx_window(pulse, p);
        const CMat d = random_grid(p, rng);
        const CVec x = modulate_reference_td(d, pulse, p);
        CHECK(std::abs(x.squaredNorm() - d.squaredNorm()) / d.squaredNorm() < 1e-9);
        const CVec x_fd = modulate_fd(d, w_tx, p);
        CHECK(std::abs(x_fd.squaredNorm() - p.block_len() * d.squaredNorm()) /
                  (p.block_len() * d.squaredNorm()) < 1e-9);
    }
}

TEST_CASE("all three modulation paths agree") {
    Rng rng(9);
    for (auto [k, m] : {std::pair{2, 2}, {4, 3}, {8, 4}}) {
        const GfdmParams p = GfdmParams::make(k, m);
        for (PulseKind kind : {PulseKind::PeriodicRc, PulseKind::RectTd, PulseKind::RectFd,
                               PulseKind::Chirp}) {
            const PrototypePulse pulse =
                make_pulse(kind, p, kind == PulseKind::PeriodicRc ? 0.6 : 0.0);
            const WindowMatrix w_tx = compute_tx_window(pulse, p);
            const CMat d = random_grid(p, rng);
            const CVec ref = modulate_reference_td(d, pulse, p);
            const CVec via_a = build_modulation_matrix(pulse, p) * vec_cols(d);
            const CVec via_fd = idft(modulate_fd(d, w_tx, p));
            CHECK((via_a - ref).norm() / ref.norm() < 1e-9);
            CHECK((via_fd - ref).norm() / ref.norm() < 1e-9);
        }
    }
}

TEST_CASE("commutation matrices") {
    const RMat p22 = commutation_matrix(2, 2);
    const int expected[4] = {0, 2, 1, 3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(p22(i, j) == (j == expected[i] ? 1.0 : 0.0));

    CHECK((commutation_matrix(5, 1) - RMat::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((commutation_matrix(4, 3) * commutation_matrix(3, 4) - RMat::Identity(12, 12))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    Rng rng(10);
    CMat x(3, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i) x(i, j) = rng.zmcsc(1.0);
    const CVec lhs = vec_cols(CMat(x.transpose()));
    const CVec rhs = apply_perm(commutation_perm(3, 4), vec_cols(x));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("FD matrix factorization") {
    Rng rng(11);
    for (auto [k, m, alpha] : {std::tuple{2, 2, 0.6}, {4, 3, 0.5}}) {
        const GfdmParams p = GfdmParams::make(k, m);
        const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, p, alpha);
        const WindowMatrix w_tx = compute_tx_window(pulse, p);
        const GfdmMatrixFactors f = build_factors(w_tx, p);
        const int n = p.block_len();

        CHECK((f.lambda_tx - std::sqrt(static_cast<double>(m)) * vec_cols(w_tx.w))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);

        const CMat vf = f.dense_vf();
        const CMat ut = f.dense_ut();
        CHECK((vf * vf.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((ut * ut.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);

        const CMat a_fd = fd_modulation_matrix(build_modulation_matrix(pulse, p));
        const CMat rebuilt = vf * f.lambda_tx.asDiagonal() * ut;
        CHECK((rebuilt - a_fd).norm() / a_fd.norm() < 1e-10);

        CVec d(n);
        for (int i = 0; i < n; ++i) d[i] = rng.zmcsc(1.0);
        CHECK((f.apply_tx(d) - a_fd * d).cwiseAbs().maxCoeff() < 1e-9);

        const WindowMatrix w_rx = zf_rx_window(w_tx);
        CVec y(n);
        for (int i = 0; i < n; ++i) y[i] = rng.zmcsc(1.0);
        const CVec via_factors = f.apply_rx_adjoint(y, w_rx);
        const CVec via_modem = vec_cols(demodulate_fd(y, w_rx, p));
        CHECK((via_factors - via_modem).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("binary matrix dump round trip") {
    Rng rng(12);
    CMat m(3, 5);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 3; ++i) m(i, j) = rng.zmcsc(1.0);
    const std::string path = "dump_c64_test.bin";
    dump_matrix_c64(path, m);
    const CMat back = load_matrix_c64(path);
    std::remove(path.c_str());
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 5);
    CHECK((back - m).cwiseAbs().maxCoeff() < 1e-6);  // float32 storage
}
