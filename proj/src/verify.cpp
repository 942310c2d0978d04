// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gfdm/analysis.hpp"
#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/qam.hpp"
#include "gfdm/receivers.hpp"
#include "gfdm/reshape.hpp"

namespace gfdm {
namespace {

CMat random_grid(const GfdmParams& params, Rng& rng) {
    CMat d(params.subcarriers, params.subsymbols);
    for (int m = 0; m < params.subsymbols; ++m)
        for (int k = 0; k < params.subcarriers; ++k) d(k, m) = rng.zmcsc(1.0);
    return d;
}

double modem_equivalence() {
    Rng rng(101);
    double worst = 0.0;
    const std::pair<int, int> geoms[] = {{2, 2}, {4, 3}, {8, 4}};
    for (const auto& [k, m] : geoms) {
        const GfdmParams params = GfdmParams::make(k, m);
        for (PulseKind kind : {PulseKind::PeriodicRc, PulseKind::RectTd, PulseKind::RectFd,
                               PulseKind::Chirp}) {
            const double alpha = kind == PulseKind::PeriodicRc ? 0.6 : 0.0;
            const PrototypePulse pulse = make_pulse(kind, params, alpha);
            const WindowMatrix w_tx = compute_tx_window(pulse, params);
            const CMat d = random_grid(params, rng);
            const CVec x_ref = modulate_reference_td(d, pulse, params);
            const CMat a = build_modulation_matrix(pulse, params);
            const CVec x_mat = a * vec_cols(d);
            const CVec x_fd = modulate_fd(d, w_tx, params);
            const double scale = x_ref.norm();
            worst = std::max(worst, (x_mat - x_ref).norm() / scale);
            worst = std::max(worst, (x_fd - dft(x_ref)).norm() / (scale * std::sqrt(1.0 * k * m)));
        }
    }
    return worst;
}

double decomposition(bool inject_fault) {
    double worst = 0.0;
    const std::pair<int, int> geoms[] = {{2, 2}, {4, 3}, {8, 4}};
    for (const auto& [k, m] : geoms) {
        const GfdmParams params = GfdmParams::make(k, m);
        const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, params, 0.6);
        WindowMatrix w_tx = compute_tx_window(pulse, params);
        if (inject_fault) w_tx.w(0, 0) += 1e-3;
        const GfdmMatrixFactors factors = build_factors(w_tx, params);
        const CMat a_fd =
            fd_modulation_matrix(build_modulation_matrix(pulse, params));
        const CMat vf = factors.dense_vf();
        const CMat ut = factors.dense_ut();
        const CMat rebuilt = vf * factors.lambda_tx.asDiagonal() * ut;
        worst = std::max(worst, (rebuilt - a_fd).norm() / a_fd.norm());
        const int n = params.block_len();
        worst = std::max(worst,
                         (vf * vf.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff());
        worst = std::max(worst,
                         (ut * ut.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return worst;
}

double joint_lmmse_equivalence() {
    Rng rng(202);
    const GfdmParams params = GfdmParams::make(4, 3, 4);
    const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, params, 0.5);
    const WindowMatrix w_tx = compute_tx_window(pulse, params);
    const WindowMatrix w_rx = zf_rx_window(w_tx);
    const CMat a_fd = fd_modulation_matrix(build_modulation_matrix(pulse, params));
    const ChannelModel model{3, PdpKind::Exponential, 1.0, true};
    double worst = 0.0;
    for (double snr_db : {0.0, 10.0, 30.0}) {
        const double sigma2 = std::pow(10.0, -snr_db / 10.0);
        const ReceiverSpec spec =
            make_receiver_spec(CeqKind::FullLmmse, DemodKind::Zf, 1.0, sigma2);
        const ChannelRealization chan = draw_channel(model, params, rng);
        CVec y_fd(params.block_len());
        for (Eigen::Index i = 0; i < y_fd.size(); ++i) y_fd[i] = rng.zmcsc(1.0);
        const CMat d_joint = oracle::joint_lmmse(y_fd, chan, a_fd, spec, params);
        const CMat d_ceq = demodulate_fd(ceq_full_lmmse(y_fd, chan, w_tx, spec, params),
                                         w_rx, params);
        const CMat d_demod = oracle::zf_dense_lmmse_demod(y_fd, chan, a_fd, spec, params);
        worst = std::max(worst, (d_joint - d_ceq).cwiseAbs().maxCoeff());
        worst = std::max(worst, (d_joint - d_demod).cwiseAbs().maxCoeff());
    }
    return worst;
}

double orthogonality() {
    double worst = 0.0;
    const auto check = [&](PulseKind kind, int k, int m, double alpha) {
        const GfdmParams params = GfdmParams::make(k, m);
        const PrototypePulse pulse = make_pulse(kind, params, alpha);
        const CMat a = build_modulation_matrix(pulse, params);
        const int n = params.block_len();
        worst = std::max(worst,
                         (a.adjoint() * a - CMat::Identity(n, n)).cwiseAbs().maxCoeff());
    };
    check(PulseKind::PeriodicRc, 32, 16, 0.0);
    check(PulseKind::RectTd, 512, 1, 0.0);
    check(PulseKind::RectFd, 1, 512, 0.0);
    check(PulseKind::Chirp, 32, 16, 0.0);
    return worst;
}

double equal_sinr() {
    Rng rng(303);
    double worst = 0.0;
    {
        const GfdmParams params = GfdmParams::make(8, 4, 8);
        const PrototypePulse pulse = make_pulse(PulseKind::PeriodicRc, params, 0.6);
        const WindowMatrix w_tx = compute_tx_window(pulse, params);
        const ChannelModel model{3, PdpKind::Exponential, 1.0, true};
        const char* chains[] = {"zf-zf", "diag-lmmse-zf", "full-lmmse-zf", "zf-lmmse"};
        for (int trial = 0; trial < 3; ++trial) {
            const ChannelRealization chan = draw_channel(model, params, rng);
            for (const char* chain : chains) {
                const ReceiverSpec spec = parse_receiver(chain, 1.0, 0.05);
                const SinrGrid grid = closed_form_sinr(
                    effective_matrices(spec, chan, w_tx, params), 1.0, 0.05, params);
                for (int k = 0; k < params.subcarriers; ++k)
                    for (int m = 0; m < params.subsymbols; ++m)
                        worst = std::max(worst, std::abs(grid.sinr(k, m) - grid.sinr(k, 0)) /
                                                    grid.sinr(k, 0));
            }
        }
    }
    {
        // SC: equal SINR across every symbol of the block.
        const GfdmParams params = GfdmParams::make(1, 64, 24);
        const PrototypePulse pulse = make_pulse(PulseKind::RectFd, params);
        const WindowMatrix w_tx = compute_tx_window(pulse, params);
        const ChannelModel model{24, PdpKind::Uniform, 0.0, true};
        const ChannelRealization chan = draw_channel(model, params, rng);
        const ReceiverSpec spec = parse_receiver("diag-lmmse-zf", 1.0, 0.1);
        const SinrGrid grid =
            closed_form_sinr(effective_matrices(spec, chan, w_tx, params), 1.0, 0.1, params);
        const double ref = grid.sinr(0, 0);
        for (int m = 0; m < params.subsymbols; ++m)
            worst = std::max(worst, std::abs(grid.sinr(0, m) - ref) / ref);
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(bool inject_window_fault) {
    std::vector<CheckResult> checks;
    checks.push_back({"modem-equivalence", false, modem_equivalence(), 1e-9});
    checks.push_back({"fd-matrix-decomposition", false, decomposition(inject_window_fault), 1e-10});
    checks.push_back({"joint-lmmse-equivalence", false, joint_lmmse_equivalence(), 1e-8});
    checks.push_back({"orthogonality-certificates", false, orthogonality(), 1e-10});
    checks.push_back({"equal-sinr-per-subcarrier", false, equal_sinr(), 1e-9});
    for (CheckResult& c : checks) c.pass = c.value < c.tolerance;
    return checks;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

}  // namespace gfdm
