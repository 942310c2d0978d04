// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gfdm/sweep.hpp"
#include "gfdm/verify.hpp"

using namespace gfdm;

namespace {

Scenario small_scenario() {
    Scenario sc = scenario_defaults(WaveformKind::Gfdm);
    sc.subcarriers = 8;
    sc.subsymbols = 4;
    sc.cp_len = 8;
    sc.alpha = 0.6;
    sc.channel.taps = 3;
    sc.receiver = "zf-zf";
    sc.snr_db = {10.0, 20.0};
    sc.n_channels = 8;
    sc.n_blocks = 30;
    sc.seed = 99;
    return sc;
}

bool rows_equal_ignoring_time(const std::vector<ResultRow>& a,
                              const std::vector<ResultRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const ResultRow& x = a[i];
        const ResultRow& y = b[i];
        if (x.scenario_id != y.scenario_id || x.snr_db != y.snr_db ||
            x.receiver != y.receiver || x.waveform != y.waveform ||
            x.ser_empirical != y.ser_empirical || x.ser_analytic != y.ser_analytic ||
            x.sinr_db != y.sinr_db || x.n_symbols != y.n_symbols)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("waveform defaults follow the standard configurations") {
    CHECK(scenario_defaults(WaveformKind::Gfdm).subcarriers == 32);
    CHECK(scenario_defaults(WaveformKind::Gfdm).subsymbols == 16);
    CHECK(scenario_defaults(WaveformKind::Ofdm).subcarriers == 512);
    CHECK(scenario_defaults(WaveformKind::Ofdm).subsymbols == 1);
    CHECK(scenario_defaults(WaveformKind::Sc).subcarriers == 1);
    CHECK(scenario_defaults(WaveformKind::Sc).subsymbols == 512);
    CHECK(scenario_defaults(WaveformKind::Chirp).subcarriers == 32);
    CHECK(scenario_defaults(WaveformKind::Sc).pulse_kind() == PulseKind::RectFd);
}

TEST_CASE("scenario settings and overrides") {
    Scenario sc;
    apply_scenario_setting(sc, "waveform", "sc");
    CHECK(sc.subcarriers == 1);
    CHECK(sc.subsymbols == 512);
    apply_scenario_setting(sc, "M", "64");
    CHECK(sc.subsymbols == 64);
    apply_scenario_setting(sc, "pdp", "exp:2.5");
    CHECK(sc.channel.pdp == PdpKind::Exponential);
    CHECK(sc.channel.decay_db_per_tap == 2.5);
    apply_scenario_setting(sc, "pdp", "uniform");
    CHECK(sc.channel.pdp == PdpKind::Uniform);
    apply_scenario_setting(sc, "seed", "12345");
    CHECK(sc.seed == 12345);
    CHECK_THROWS_AS(apply_scenario_setting(sc, "bogus", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_scenario_setting(sc, "pdp", "rice"), std::invalid_argument);
}

TEST_CASE("snr grid parsing") {
    const auto grid = parse_snr_grid("0:5:30");
    REQUIRE(grid.size() == 7);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 30.0);
    const auto list = parse_snr_grid("1,2.5,inf");
    REQUIRE(list.size() == 3);
    CHECK(std::isinf(list[2]));
    CHECK_THROWS_AS(parse_snr_grid("10:0:20"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("abc"), std::invalid_argument);
}

TEST_CASE("scenario config file") {
    const std::string path = "scenario_test.cfg";
    {
        std::ofstream out(path);
        out << "# comment line\n"
               "waveform = gfdm\n"
               "K = 8\n"
               "M = 4\n"
               "cp = 8\n"
               "alpha = 0.6  # inline comment\n"
               "receiver = diag-lmmse-zf\n"
               "snr = 0:10:20\n"
               "taps = 3\n"
               "channels = 4\n"
               "blocks = 2\n"
               "seed = 7\n";
    }
    const Scenario sc = parse_scenario_file(path);
    std::remove(path.c_str());
    CHECK(sc.subcarriers == 8);
    CHECK(sc.alpha == 0.6);
    CHECK(sc.receiver == "diag-lmmse-zf");
    CHECK(sc.snr_db.size() == 3);
    CHECK(sc.seed == 7);
    CHECK_NOTHROW(sc.validate());
    CHECK_THROWS_AS(parse_scenario_file("does_not_exist.cfg"), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    std::vector<ResultRow> rows(2);
    rows[0] = {"id-a", 10.0, "zf-zf", "gfdm", 0.12345678901234567, 0.1234, 9.87, 0.5, 64000};
    rows[1] = {"id-b", std::numeric_limits<double>::infinity(), "zf-lmmse", "sc", 0.0, 1e-300,
               -3.25, 0.125, 512};
    const std::string csv = rows_to_csv(rows);
    CHECK(csv.rfind("scenario_id,snr_db,receiver,waveform,avg_ser_empirical,"
                    "avg_ser_analytic,avg_sinr_db,wall_time_s,n_symbols\n", 0) == 0);
    const auto back = rows_from_csv(csv);
    REQUIRE(back.size() == 2);
    CHECK(back[0].ser_empirical == rows[0].ser_empirical);
    CHECK(back[1].ser_analytic == rows[1].ser_analytic);
    CHECK(std::isinf(back[1].snr_db));
    CHECK(back[1].n_symbols == 512);
    CHECK(rows_to_csv(back) == csv);
}

TEST_CASE("run_sweep is deterministic across worker counts") {
    const Scenario sc = small_scenario();
    const auto rows1 = run_sweep(sc, 1);
    const auto rows2 = run_sweep(sc, 4);
    REQUIRE(rows1.size() == 2);
    CHECK(rows_equal_ignoring_time(rows1, rows2));
    CHECK(rows1[0].n_symbols == 8LL * 30 * 32);
    // Same seed, same run -> identical again.
    const auto rows3 = run_sweep(sc, 2);
    CHECK(rows_equal_ignoring_time(rows1, rows3));
}

TEST_CASE("noiseless sweep rows have zero empirical SER") {
    Scenario sc = small_scenario();
    sc.snr_db = {std::numeric_limits<double>::infinity()};
    sc.n_channels = 3;
    sc.n_blocks = 5;
    const auto rows = run_sweep(sc, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].ser_empirical == 0.0);
}

TEST_CASE("analytic SER sits within three binomial standard errors of the empirical") {
    Scenario sc = small_scenario();
    sc.n_channels = 12;
    sc.n_blocks = 60;
    sc.snr_db = {5.0, 10.0, 15.0};
    for (const ResultRow& row : run_sweep(sc, 2)) {
        if (row.ser_empirical <= 10.0 / static_cast<double>(row.n_symbols)) continue;
        const double se =
            std::sqrt(row.ser_analytic * (1.0 - row.ser_analytic) /
                      static_cast<double>(row.n_symbols));
        CHECK(std::abs(row.ser_empirical - row.ser_analytic) < 3.0 * se);
    }
}

TEST_CASE("verification suite passes and the fault hook trips it") {
    const auto checks = run_verification(false);
    CHECK(all_pass(checks));
    const auto faulty = run_verification(true);
    CHECK_FALSE(all_pass(faulty));
    for (const CheckResult& c : faulty)
        if (c.name == "fd-matrix-decomposition") CHECK_FALSE(c.pass);
}
