// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/pulse.hpp"

#include <cmath>
#include <numbers>

#include "gfdm/dft.hpp"

namespace gfdm {
namespace {

double rc_profile(double x, int m, double alpha) {
    const double flat = m * (1.0 - alpha) / 2.0;
    const double edge = m * (1.0 + alpha) / 2.0;
    x = std::abs(x);
    if (x <= flat) return 1.0;
    if (alpha > 0.0 && x <= edge)
        return 0.5 * (1.0 + std::cos(std::numbers::pi * (x - flat) / (m * alpha)));
    return 0.0;
}

PrototypePulse from_fd(PulseKind kind, double alpha, CVec g_fd) {
    PrototypePulse pulse;
    pulse.kind = kind;
    pulse.alpha = alpha;
    pulse.g = idft(g_fd);
    const double energy = pulse.g.norm();
    pulse.g /= energy;
    pulse.g_fd = std::move(g_fd);
    pulse.g_fd /= energy;
    return pulse;
}

PrototypePulse from_td(PulseKind kind, CVec g) {
    PrototypePulse pulse;
    pulse.kind = kind;
    pulse.g = std::move(g);
    pulse.g /= pulse.g.norm();
    pulse.g_fd = dft(pulse.g);
    return pulse;
}

}  // namespace

const char* pulse_name(PulseKind kind) {
    switch (kind) {
        case PulseKind::PeriodicRc: return "periodic-rc";
        case PulseKind::RectTd: return "rect-td";
        case PulseKind::RectFd: return "rect-fd";
        case PulseKind::Chirp: return "chirp";
    }
    return "?";
}

PrototypePulse make_pulse(PulseKind kind, const GfdmParams& params, double alpha) {
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    const int n = params.block_len();

    switch (kind) {
        case PulseKind::RectTd:
            return from_td(kind, CVec::Constant(n, cplx(1.0, 0.0)));

        case PulseKind::RectFd:
            return from_fd(kind, 0.0, CVec::Constant(n, cplx(1.0, 0.0)));

        case PulseKind::Chirp: {
            CVec g = CVec::Zero(n);
            for (int i = 0; i < k; ++i)
                g[i] = std::polar(1.0, std::numbers::pi * static_cast<double>(i) * i / k);
            return from_td(kind, std::move(g));
        }

        case PulseKind::PeriodicRc: {
            if (alpha < 0.0 || alpha >= 1.0)
                throw std::invalid_argument("make_pulse: roll-off must satisfy 0 <= alpha < 1");
            if (alpha > 0.0 && m * alpha <= 1.0)
                throw std::invalid_argument(
                    "make_pulse: periodic RC requires M*alpha > 1 for alpha > 0 (got M*alpha = " +
                    std::to_string(m * alpha) + ")");
            const double offset = (m % 2 == 0) ? 0.5 : 0.0;
            CVec g_fd(n);
            for (int b = 0; b < n; ++b) {
                const int l = (b <= n / 2) ? b : b - n;
                g_fd[b] = rc_profile(l + offset, m, alpha);
            }
            return from_fd(kind, alpha, std::move(g_fd));
        }
    }
    throw std::invalid_argument("make_pulse: unknown pulse kind");
}

}  // namespace gfdm
