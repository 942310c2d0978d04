// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <mutex>
#include <thread>

#include "gfdm/analysis.hpp"
#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/qam.hpp"
#include "gfdm/window.hpp"

namespace gfdm {
namespace {

// Stream purposes for derive_seed; block-level streams are additionally keyed
// by the block index so noise and data are paired across SNR points and
// receiver chains.
constexpr std::uint64_t kChannelStream = 0x10;
constexpr std::uint64_t kDataStream = 0x20;
constexpr std::uint64_t kNoiseStream = 0x30;

struct CellResult {
    bool singular = false;
    std::int64_t errors = 0;
    std::int64_t symbols = 0;
    double ser_analytic = 0.0;
    double sinr_linear = 0.0;  // grid mean
};

double noise_var_for(double snr_db, double symbol_energy) {
    if (std::isinf(snr_db)) return 0.0;
    return symbol_energy * std::pow(10.0, -snr_db / 10.0);
}

CellResult run_cell(const Scenario& sc, const GfdmParams& params, const WindowMatrix& w_tx,
                    double snr_db, int chan_index) {
    CellResult cell;
    Rng chan_rng(derive_seed(sc.seed, kChannelStream, static_cast<std::uint64_t>(chan_index)));
    const ChannelRealization chan = draw_channel(sc.channel, params, chan_rng);
    const double sigma2 = noise_var_for(snr_db, sc.symbol_energy);
    const ReceiverSpec spec = parse_receiver(sc.receiver, sc.symbol_energy, sigma2);
    const QamConstellation qam(sc.qam_order, sc.symbol_energy);

    try {
        const EqualizerBank bank = make_equalizer(spec, chan, w_tx, params);
        const WindowMatrix w_rx = receive_window(spec, chan, w_tx, params);
        const EffectiveMatrices eff = effective_matrices(spec, chan, w_tx, params);
        const CVec gains = overall_gains(eff, params);
        const SinrGrid grid = closed_form_sinr(eff, sc.symbol_energy, sigma2, params);
        cell.ser_analytic = mean_analytic_ser(grid, sc.qam_order);
        cell.sinr_linear = grid.sinr.mean();

        Eigen::MatrixXi tx_idx(params.subcarriers, params.subsymbols);
        CMat d(params.subcarriers, params.subsymbols);
        for (int b = 0; b < sc.n_blocks; ++b) {
            Rng data_rng(derive_seed(sc.seed, kDataStream, static_cast<std::uint64_t>(chan_index),
                                     static_cast<std::uint64_t>(b)));
            Rng noise_rng(derive_seed(sc.seed, kNoiseStream,
                                      static_cast<std::uint64_t>(chan_index),
                                      static_cast<std::uint64_t>(b)));
            for (int m = 0; m < params.subsymbols; ++m)
                for (int k = 0; k < params.subcarriers; ++k) {
                    tx_idx(k, m) = data_rng.below(sc.qam_order);
                    d(k, m) = qam.point(tx_idx(k, m));
                }
            const CVec x = idft(modulate_fd(d, w_tx, params));
            const CVec y = apply_channel_cp(x, chan, params.cp_len, sigma2, noise_rng);
            const CVec y_eq = apply_equalizer(bank, dft(y), params);
            const CMat d_hat = demodulate_fd(y_eq, w_rx, params);
            for (int m = 0; m < params.subsymbols; ++m)
                for (int k = 0; k < params.subcarriers; ++k)
                    if (qam.hard_decision(d_hat(k, m) / gains[k]) != tx_idx(k, m))
                        ++cell.errors;
        }
        cell.symbols = static_cast<std::int64_t>(sc.n_blocks) * params.block_len();
    } catch (const SingularChannelError&) {
        cell.singular = true;
    } catch (const SingularWindowError&) {
        cell.singular = true;
    }
    return cell;
}

}  // namespace

std::vector<ResultRow> run_sweep(const Scenario& scenario, int workers, SweepStats* stats) {
    scenario.validate();
    const GfdmParams params = scenario.params();
    const PrototypePulse pulse = scenario.pulse();
    const WindowMatrix w_tx = compute_tx_window(pulse, params);

    int n_workers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;

    std::vector<ResultRow> rows;
    rows.reserve(scenario.snr_db.size());
    for (double snr : scenario.snr_db) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CellResult> cells(static_cast<size_t>(scenario.n_channels));
        std::atomic<int> next{0};
        std::exception_ptr worker_error;
        std::mutex error_mutex;
        auto work = [&] {
            try {
                for (;;) {
                    const int c = next.fetch_add(1);
                    if (c >= scenario.n_channels) return;
                    cells[static_cast<size_t>(c)] = run_cell(scenario, params, w_tx, snr, c);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!worker_error) worker_error = std::current_exception();
            }
        };
        if (n_workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(n_workers));
            for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        if (worker_error) std::rethrow_exception(worker_error);

        ResultRow row;
        row.scenario_id = scenario.id();
        row.snr_db = snr;
        row.receiver = scenario.receiver;
        row.waveform = waveform_name(scenario.waveform);
        std::int64_t errors = 0, singular = 0;
        double ser_acc = 0.0, sinr_acc = 0.0;
        for (const CellResult& cell : cells) {
            if (cell.singular) {
                ++singular;
                continue;
            }
            errors += cell.errors;
            row.n_symbols += cell.symbols;
            ser_acc += cell.ser_analytic;
            sinr_acc += cell.sinr_linear;
        }
        const std::int64_t used = scenario.n_channels - singular;
        row.ser_empirical = row.n_symbols > 0
                                ? static_cast<double>(errors) / static_cast<double>(row.n_symbols)
                                : 0.0;
        row.ser_analytic = used > 0 ? ser_acc / static_cast<double>(used) : 0.0;
        row.sinr_db = used > 0 ? 10.0 * std::log10(sinr_acc / static_cast<double>(used))
                               : 0.0;
        row.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (singular > 0) {
            std::cerr << "gfdm: " << singular << "/" << scenario.n_channels
                      << " channel realizations skipped as singular at snr=" << snr << " dB\n";
            if (stats) stats->singular_channels += singular;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gfdm
