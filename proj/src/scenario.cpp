// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gfdm/qam.hpp"

namespace gfdm {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

long to_long(const std::string& s) {
    size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

const char* waveform_name(WaveformKind kind) {
    switch (kind) {
        case WaveformKind::Gfdm: return "gfdm";
        case WaveformKind::Ofdm: return "ofdm";
        case WaveformKind::Sc: return "sc";
        case WaveformKind::Chirp: return "chirp";
    }
    return "?";
}

WaveformKind parse_waveform(const std::string& name) {
    if (name == "gfdm") return WaveformKind::Gfdm;
    if (name == "ofdm") return WaveformKind::Ofdm;
    if (name == "sc") return WaveformKind::Sc;
    if (name == "chirp") return WaveformKind::Chirp;
    throw std::invalid_argument("unknown waveform '" + name +
                                "'; expected gfdm, ofdm, sc or chirp");
}

GfdmParams Scenario::params() const {
    return GfdmParams::make(subcarriers, subsymbols, cp_len);
}

PulseKind Scenario::pulse_kind() const {
    switch (waveform) {
        case WaveformKind::Gfdm: return PulseKind::PeriodicRc;
        case WaveformKind::Ofdm: return PulseKind::RectTd;
        case WaveformKind::Sc: return PulseKind::RectFd;
        case WaveformKind::Chirp: return PulseKind::Chirp;
    }
    throw std::logic_error("Scenario::pulse_kind");
}

PrototypePulse Scenario::pulse() const {
    return make_pulse(pulse_kind(), params(),
                      waveform == WaveformKind::Gfdm ? alpha : 0.0);
}

std::string Scenario::id() const {
    std::ostringstream id;
    id << waveform_name(waveform) << "-" << subcarriers << "x" << subsymbols;
    if (waveform == WaveformKind::Gfdm) id << "-a" << alpha;
    id << "-" << receiver << "-"
       << (channel.pdp == PdpKind::Exponential ? "exp" : "uni") << "-s" << seed;
    return id.str();
}

void Scenario::validate_geometry() const {
    params();
    parse_receiver(receiver, symbol_energy, 0.0);
    pulse();
}

void Scenario::validate() const {
    validate_geometry();
    if (snr_db.empty()) throw std::invalid_argument("scenario: empty SNR grid");
    if (n_channels < 1 || n_blocks < 1)
        throw std::invalid_argument("scenario: channel and block counts must be positive");
    if (channel.taps < 1 || channel.taps - 1 > cp_len)
        throw std::invalid_argument("scenario: need 1 <= taps <= cp_len + 1");
    QamConstellation check_order(qam_order, symbol_energy);
    (void)check_order;
}

Scenario scenario_defaults(WaveformKind kind) {
    Scenario sc;
    sc.waveform = kind;
    switch (kind) {
        case WaveformKind::Gfdm:
        case WaveformKind::Chirp:
            sc.subcarriers = 32;
            sc.subsymbols = 16;
            break;
        case WaveformKind::Ofdm:
            sc.subcarriers = 512;
            sc.subsymbols = 1;
            break;
        case WaveformKind::Sc:
            sc.subcarriers = 1;
            sc.subsymbols = 512;
            break;
    }
    return sc;
}

std::vector<double> parse_snr_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument("snr grid must be start:step:stop");
        const double start = to_double(parts[0]);
        const double step = to_double(parts[1]);
        const double stop = to_double(parts[2]);
        if (step <= 0) throw std::invalid_argument("snr grid step must be positive");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        for (const auto& item : split(text, ',')) grid.push_back(to_double(trim(item)));
    }
    if (grid.empty()) throw std::invalid_argument("empty snr grid");
    return grid;
}

void parse_pdp(const std::string& text, ChannelModel& model) {
    if (text == "uniform" || text == "uni") {
        model.pdp = PdpKind::Uniform;
        return;
    }
    if (text.rfind("exp", 0) == 0) {
        model.pdp = PdpKind::Exponential;
        const auto colon = text.find(':');
        if (colon != std::string::npos)
            model.decay_db_per_tap = to_double(text.substr(colon + 1));
        return;
    }
    throw std::invalid_argument("unknown pdp '" + text + "'; expected exp[:db_per_tap] or uniform");
}

void apply_scenario_setting(Scenario& sc, const std::string& key, const std::string& value) {
    if (key == "waveform") {
        const WaveformKind kind = parse_waveform(value);
        const Scenario defaults = scenario_defaults(kind);
        sc.waveform = kind;
        sc.subcarriers = defaults.subcarriers;
        sc.subsymbols = defaults.subsymbols;
    } else if (key == "K" || key == "subcarriers") {
        sc.subcarriers = static_cast<int>(to_long(value));
    } else if (key == "M" || key == "subsymbols") {
        sc.subsymbols = static_cast<int>(to_long(value));
    } else if (key == "cp") {
        sc.cp_len = static_cast<int>(to_long(value));
    } else if (key == "alpha") {
        sc.alpha = to_double(value);
    } else if (key == "receiver") {
        sc.receiver = value;
    } else if (key == "pdp") {
        parse_pdp(value, sc.channel);
    } else if (key == "taps") {
        sc.channel.taps = static_cast<int>(to_long(value));
    } else if (key == "snr") {
        sc.snr_db = parse_snr_grid(value);
    } else if (key == "channels") {
        sc.n_channels = static_cast<int>(to_long(value));
    } else if (key == "blocks") {
        sc.n_blocks = static_cast<int>(to_long(value));
    } else if (key == "seed") {
        sc.seed = static_cast<std::uint64_t>(std::stoull(value));
    } else if (key == "mc") {
        sc.qam_order = static_cast<int>(to_long(value));
    } else if (key == "es") {
        sc.symbol_energy = to_double(value);
    } else {
        throw std::invalid_argument("unknown scenario key '" + key + "'");
    }
}

Scenario parse_scenario_file(const std::string& path, const Scenario& base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    Scenario sc = base;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key = value");
        try {
            apply_scenario_setting(sc, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return sc;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "scenario_id,snr_db,receiver,waveform,avg_ser_empirical,avg_ser_analytic,"
           "avg_sinr_db,wall_time_s,n_symbols\n";
    for (const ResultRow& r : rows) {
        out << r.scenario_id << ',' << format_double(r.snr_db) << ',' << r.receiver << ','
            << r.waveform << ',' << format_double(r.ser_empirical) << ','
            << format_double(r.ser_analytic) << ',' << format_double(r.sinr_db) << ','
            << format_double(r.wall_time_s) << ',' << r.n_symbols << '\n';
    }
    return out.str();
}

std::vector<ResultRow> rows_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("rows_from_csv: empty input");
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9) throw std::invalid_argument("rows_from_csv: expected 9 columns");
        ResultRow r;
        r.scenario_id = f[0];
        r.snr_db = to_double(f[1]);
        r.receiver = f[2];
        r.waveform = f[3];
        r.ser_empirical = to_double(f[4]);
        r.ser_analytic = to_double(f[5]);
        r.sinr_db = to_double(f[6]);
        r.wall_time_s = to_double(f[7]);
        r.n_symbols = to_long(f[8]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace gfdm
