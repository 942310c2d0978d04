// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfdm/channel.hpp"
#include "gfdm/pulse.hpp"
#include "gfdm/receivers.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

enum class WaveformKind { Gfdm, Ofdm, Sc, Chirp };

const char* waveform_name(WaveformKind kind);
WaveformKind parse_waveform(const std::string& name);

/// One Monte-Carlo sweep: a waveform/receiver pair evaluated on a grid of
/// SNR points over n_channels block-fading realizations with n_blocks data
/// blocks each. Fully determined by (fields, seed).
struct Scenario {
    WaveformKind waveform = WaveformKind::Gfdm;
    int subcarriers = 32;
    int subsymbols = 16;
    int cp_len = 32;
    double alpha = 0.8;  // periodic-RC roll-off (GFDM waveform only)
    std::string receiver = "full-lmmse-zf";
    ChannelModel channel;
    std::vector<double> snr_db = {0, 5, 10, 15, 20, 25, 30};
    int n_channels = 200;
    int n_blocks = 50;
    std::uint64_t seed = 1;
    int qam_order = 16;
    double symbol_energy = 1.0;

    GfdmParams params() const;
    PulseKind pulse_kind() const;
    PrototypePulse pulse() const;
    std::string id() const;
    /// Geometry, pulse and receiver-name checks only (enough for window and
    /// matrix dumps).
    void validate_geometry() const;
    /// Full sweep validation including channel model and Monte-Carlo counts.
    void validate() const;
};

/// Table-default geometry for each waveform (GFDM/Chirp 32x16, OFDM 512x1,
/// SC 1x512).
Scenario scenario_defaults(WaveformKind kind);

/// Applies one "key = value" setting; the same keys work in config files and
/// as CLI overrides. Unknown keys throw std::invalid_argument.
void apply_scenario_setting(Scenario& sc, const std::string& key, const std::string& value);

/// Flat key=value config file ('#' comments, blank lines ignored); settings
/// are applied on top of `base`.
Scenario parse_scenario_file(const std::string& path, const Scenario& base = Scenario{});

/// SNR grid syntax: "start:step:stop", a comma list, or "inf" entries for
/// noiseless rows.
std::vector<double> parse_snr_grid(const std::string& text);

/// "exp:<db_per_tap>" or "uniform".
void parse_pdp(const std::string& text, ChannelModel& model);

struct ResultRow {
    std::string scenario_id;
    double snr_db = 0.0;
    std::string receiver;
    std::string waveform;
    double ser_empirical = 0.0;
    double ser_analytic = 0.0;
    double sinr_db = 0.0;
    double wall_time_s = 0.0;
    std::int64_t n_symbols = 0;
};

std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(const std::string& csv);

}  // namespace gfdm
