// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include "gfdm/rng.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

/// Square QAM grid with mean symbol energy Es; per-axis levels are the odd
/// multiples of step = sqrt(3 Es / (2 (order - 1))). Hard decisions are
/// nearest-point (per-axis rounding, equivalent to minimum Euclidean
/// distance on a square grid).
class QamConstellation {
  public:
    QamConstellation(int order, double symbol_energy);

    int order() const { return order_; }
    cplx point(int index) const;
    int hard_decision(cplx y) const;
    cplx draw(Rng& rng) const;

  private:
    int axis_level(double v) const;
    int order_;
    int side_;
    double step_;
};

/// Random K x M grid of QAM symbols.
CMat draw_qam_grid(const QamConstellation& qam, const GfdmParams& params, Rng& rng);

}  // namespace gfdm
