// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gfdm {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Block geometry: K subcarriers x M subsymbols, N = K*M samples plus an
/// optional cyclic prefix.
struct GfdmParams {
    int subcarriers = 0;  // K
    int subsymbols = 0;   // M
    int cp_len = 0;

    int block_len() const { return subcarriers * subsymbols; }

    static GfdmParams make(int subcarriers, int subsymbols, int cp_len = 0) {
        if (subcarriers < 1 || subsymbols < 1)
            throw std::invalid_argument("GfdmParams: subcarriers and subsymbols must be >= 1");
        if (cp_len < 0 || cp_len >= subcarriers * subsymbols)
            throw std::invalid_argument("GfdmParams: cp_len must satisfy 0 <= cp_len < K*M");
        return GfdmParams{subcarriers, subsymbols, cp_len};
    }
};

inline void check_block_dims(const GfdmParams& p, Eigen::Index rows, Eigen::Index cols,
                             const char* what) {
    if (rows != p.subcarriers || cols != p.subsymbols)
        throw std::invalid_argument(std::string(what) + ": expected a " +
                                    std::to_string(p.subcarriers) + "x" +
                                    std::to_string(p.subsymbols) + " matrix");
}

inline void check_block_len(const GfdmParams& p, Eigen::Index n, const char* what) {
    if (n != p.block_len())
        throw std::invalid_argument(std::string(what) + ": expected a length-" +
                                    std::to_string(p.block_len()) + " block");
}

}  // namespace gfdm
