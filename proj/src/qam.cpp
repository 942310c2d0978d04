// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/qam.hpp"

#include <cmath>

namespace gfdm {

QamConstellation::QamConstellation(int order, double symbol_energy) : order_(order) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (order < 4 || side * side != order)
        throw std::invalid_argument("QamConstellation: order must be a perfect square >= 4");
    if (symbol_energy <= 0.0)
        throw std::invalid_argument("QamConstellation: symbol energy must be positive");
    side_ = side;
    step_ = std::sqrt(3.0 * symbol_energy / (2.0 * (order - 1)));
}

cplx QamConstellation::point(int index) const {
    const int i = index / side_;
    const int q = index % side_;
    return cplx((2 * i - (side_ - 1)) * step_, (2 * q - (side_ - 1)) * step_);
}

int QamConstellation::axis_level(double v) const {
    int i = static_cast<int>(std::lround((v / step_ + (side_ - 1)) / 2.0));
    if (i < 0) i = 0;
    if (i >= side_) i = side_ - 1;
    return i;
}

int QamConstellation::hard_decision(cplx y) const {
    return axis_level(y.real()) * side_ + axis_level(y.imag());
}

cplx QamConstellation::draw(Rng& rng) const {
    return point(rng.below(order_));
}

CMat draw_qam_grid(const QamConstellation& qam, const GfdmParams& params, Rng& rng) {
    CMat d(params.subcarriers, params.subsymbols);
    for (Eigen::Index m = 0; m < d.cols(); ++m)
        for (Eigen::Index k = 0; k < d.rows(); ++k) d(k, m) = qam.draw(rng);
    return d;
}

}  // namespace gfdm
