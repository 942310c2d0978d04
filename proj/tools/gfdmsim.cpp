// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors
//
// gfdmsim: link-level simulator around libgfdm. Subcommands:
//   sweep     Monte-Carlo SER/SINR sweep over an SNR grid, CSV output
//   verify    run the numerical identity suite, table or JSON output
//   windows   dump modulator / receiver window tables, optional binary dumps
//   sinr-map  closed-form per-symbol SINR map for one channel draw, JSON
//
// Exit codes: 0 success, 2 configuration error, 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gfdm/analysis.hpp"
#include "gfdm/dft.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/receivers.hpp"
#include "gfdm/scenario.hpp"
#include "gfdm/sweep.hpp"
#include "gfdm/verify.hpp"

namespace {

struct ScenarioCli {
    std::string config;
    std::vector<std::pair<std::string, std::string>> overrides;

    void add_options(CLI::App* cmd, bool with_sweep_counts) {
        cmd->add_option("--config", config, "flat key = value scenario file");
        auto track = [this](const std::string& key) {
            return [this, key](const std::string& v) { overrides.emplace_back(key, v); };
        };
        cmd->add_option_function<std::string>("--waveform", track("waveform"),
                                              "gfdm | ofdm | sc | chirp");
        cmd->add_option_function<std::string>("--K", track("K"), "subcarriers");
        cmd->add_option_function<std::string>("--M", track("M"), "subsymbols");
        cmd->add_option_function<std::string>("--cp", track("cp"), "cyclic prefix length");
        cmd->add_option_function<std::string>("--alpha", track("alpha"), "RC roll-off");
        cmd->add_option_function<std::string>("--receiver", track("receiver"),
                                              "zf-zf | diag-lmmse-zf | full-lmmse-zf | zf-lmmse");
        cmd->add_option_function<std::string>("--pdp", track("pdp"),
                                              "exp[:db_per_tap] or uniform");
        cmd->add_option_function<std::string>("--taps", track("taps"), "channel tap count");
        cmd->add_option_function<std::string>("--snr", track("snr"),
                                              "SNR grid, start:step:stop or comma list");
        cmd->add_option_function<std::string>("--seed", track("seed"), "master seed");
        cmd->add_option_function<std::string>("--mc", track("mc"), "QAM order");
        if (with_sweep_counts) {
            cmd->add_option_function<std::string>("--channels", track("channels"),
                                                  "channel realizations per SNR point");
            cmd->add_option_function<std::string>("--blocks", track("blocks"),
                                                  "data blocks per channel");
        }
    }

    gfdm::Scenario build(bool geometry_only = false) const {
        // Seed precedence: --seed flag > config file > GFDMSIM_SEED > built-in.
        gfdm::Scenario base;
        if (const char* env = std::getenv("GFDMSIM_SEED"))
            gfdm::apply_scenario_setting(base, "seed", env);
        gfdm::Scenario sc = config.empty() ? base : gfdm::parse_scenario_file(config, base);
        for (const auto& [key, value] : overrides) gfdm::apply_scenario_setting(sc, key, value);
        if (geometry_only)
            sc.validate_geometry();
        else
            sc.validate();
        return sc;
    }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << text;
}

int cmd_sweep(const ScenarioCli& cli, const std::string& out_path, int workers) {
    const gfdm::Scenario sc = cli.build();
    gfdm::SweepStats stats;
    const std::vector<gfdm::ResultRow> rows = gfdm::run_sweep(sc, workers, &stats);
    write_output(out_path, gfdm::rows_to_csv(rows));
    if (stats.singular_channels > 0)
        std::cerr << "gfdmsim: " << stats.singular_channels
                  << " singular channel realizations were skipped in total\n";
    return 0;
}

int cmd_verify(bool json, bool inject_fault) {
    const std::vector<gfdm::CheckResult> checks = gfdm::run_verification(inject_fault);
    if (json) {
        nlohmann::json out;
        out["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            out["checks"].push_back({{"name", c.name},
                                     {"pass", c.pass},
                                     {"max_deviation", c.value},
                                     {"tolerance", c.tolerance}});
        out["pass"] = gfdm::all_pass(checks);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::printf("%-28s %s  (max deviation %.3e, tolerance %.0e)\n", c.name.c_str(),
                        c.pass ? "PASS" : "FAIL", c.value, c.tolerance);
        }
    }
    if (!gfdm::all_pass(checks)) {
        for (const auto& c : checks)
            if (!c.pass) {
                std::cerr << "gfdmsim: verification failed at check '" << c.name << "'\n";
                break;
            }
        return 3;
    }
    return 0;
}

int cmd_windows(const ScenarioCli& cli, const std::string& out_path,
                const std::string& channel_path, std::optional<double> snr_db,
                const std::string& dump_a, const std::string& dump_afd,
                const std::string& dump_wtx) {
    const gfdm::Scenario sc = cli.build(true);
    const gfdm::GfdmParams params = sc.params();
    const gfdm::PrototypePulse pulse = sc.pulse();
    const gfdm::WindowMatrix w_tx = gfdm::compute_tx_window(pulse, params);

    std::optional<gfdm::WindowMatrix> w_rx;
    if (!channel_path.empty()) {
        std::ifstream in(channel_path);
        if (!in) throw std::invalid_argument("cannot open channel file " + channel_path);
        nlohmann::json j;
        in >> j;
        const gfdm::ChannelRealization chan = gfdm::channel_from_json(j, params);
        const double snr = snr_db.value_or(10.0);
        const double sigma2 = sc.symbol_energy * std::pow(10.0, -snr / 10.0);
        const gfdm::ReceiverSpec spec =
            gfdm::parse_receiver("zf-lmmse", sc.symbol_energy, sigma2);
        w_rx = gfdm::demod_lmmse_window(chan, w_tx, spec, params);
    } else if (snr_db) {
        throw std::invalid_argument("--snr for the receive window requires --channel");
    }

    std::ostringstream out;
    out << "window,k,m,magnitude,phase\n";
    auto emit = [&out](const char* name, const gfdm::CMat& w) {
        for (int m = 0; m < w.cols(); ++m)
            for (int k = 0; k < w.rows(); ++k)
                out << name << ',' << k << ',' << m << ',' << std::abs(w(k, m)) << ','
                    << std::arg(w(k, m)) << '\n';
    };
    emit("tx", w_tx.w);
    if (w_rx) emit("rx", w_rx->w);
    write_output(out_path, out.str());

    if (!dump_a.empty() || !dump_afd.empty()) {
        const gfdm::CMat a = gfdm::build_modulation_matrix(pulse, params);
        if (!dump_a.empty()) gfdm::dump_matrix_c64(dump_a, a);
        if (!dump_afd.empty()) gfdm::dump_matrix_c64(dump_afd, gfdm::fd_modulation_matrix(a));
    }
    if (!dump_wtx.empty()) gfdm::dump_matrix_c64(dump_wtx, w_tx.w);
    return 0;
}

int cmd_sinr_map(const ScenarioCli& cli, const std::string& out_path, double snr_db,
                 int channel_index) {
    gfdm::Scenario sc = cli.build();
    const gfdm::GfdmParams params = sc.params();
    const gfdm::WindowMatrix w_tx = gfdm::compute_tx_window(sc.pulse(), params);
    gfdm::Rng rng(gfdm::derive_seed(sc.seed, 0x10, static_cast<std::uint64_t>(channel_index)));
    const gfdm::ChannelRealization chan = gfdm::draw_channel(sc.channel, params, rng);
    const double sigma2 = sc.symbol_energy * std::pow(10.0, -snr_db / 10.0);
    const gfdm::ReceiverSpec spec =
        gfdm::parse_receiver(sc.receiver, sc.symbol_energy, sigma2);
    const gfdm::SinrGrid grid = gfdm::closed_form_sinr(
        gfdm::effective_matrices(spec, chan, w_tx, params), sc.symbol_energy, sigma2, params);

    auto mat = [](const gfdm::RMat& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int k = 0; k < m.rows(); ++k) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.cols(); ++c) {
                const double v = m(k, c);
                row.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json());
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    nlohmann::json out{{"scenario", sc.id()},
                       {"receiver", sc.receiver},
                       {"snr_db", snr_db},
                       {"channel_index", channel_index},
                       {"channel", gfdm::channel_to_json(chan)},
                       {"signal_power", mat(grid.signal)},
                       {"isi_power", mat(grid.isi)},
                       {"ici_power", mat(grid.ici)},
                       {"noise_power", mat(grid.noise)},
                       {"sinr", mat(grid.sinr)}};
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GFDM frequency-domain modem and linear receiver simulator"};
    app.require_subcommand(1);

    ScenarioCli sweep_cli, windows_cli, sinr_cli;
    std::string sweep_out, windows_out, sinr_out = "-";
    std::string channel_path, dump_a, dump_afd, dump_wtx;
    int workers = 0;
    int channel_index = 0;
    double sinr_snr = 10.0;
    std::optional<double> windows_snr;
    bool verify_json = false, inject_fault = false;

    CLI::App* sweep = app.add_subcommand("sweep", "run a Monte-Carlo SER/SINR sweep");
    sweep_cli.add_options(sweep, true);
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
    sweep->add_option("--workers", workers, "worker threads (0 = all cores)");

    CLI::App* verify = app.add_subcommand("verify", "run the numerical identity suite");
    verify->add_flag("--json", verify_json, "machine-readable output");
    verify->add_flag("--inject-fault", inject_fault,
                     "perturb the modulator window to force a failure (debug hook)");

    CLI::App* windows = app.add_subcommand("windows", "dump window magnitude/phase tables");
    windows_cli.add_options(windows, false);
    windows->add_option("--out", windows_out, "output CSV path (default stdout)");
    windows->add_option("--channel", channel_path,
                        "channel JSON file; enables the LMMSE receive window");
    windows->add_option_function<double>(
        "--rx-snr", [&](double v) { windows_snr = v; },
        "SNR in dB for the receive window (needs --channel)");
    windows->add_option("--dump-a", dump_a, "binary dump of the modulation matrix");
    windows->add_option("--dump-afd", dump_afd, "binary dump of the FD modulation matrix");
    windows->add_option("--dump-wtx", dump_wtx, "binary dump of the modulator window");

    CLI::App* sinr_map = app.add_subcommand("sinr-map", "closed-form per-symbol SINR map");
    sinr_cli.add_options(sinr_map, false);
    sinr_map->add_option("--out", sinr_out, "output JSON path (default stdout)");
    sinr_map->add_option("--snr-db", sinr_snr, "SNR point in dB");
    sinr_map->add_option("--channel-index", channel_index, "index of the channel draw");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_cli, sweep_out, workers);
        if (verify->parsed()) return cmd_verify(verify_json, inject_fault);
        if (windows->parsed())
            return cmd_windows(windows_cli, windows_out, channel_path, windows_snr, dump_a,
                               dump_afd, dump_wtx);
        if (sinr_map->parsed()) return cmd_sinr_map(sinr_cli, sinr_out, sinr_snr, channel_index);
    } catch (const std::exception& e) {
        std::cerr << "gfdmsim: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
