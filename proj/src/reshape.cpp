// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/reshape.hpp"

namespace gfdm {

CMat reshape_v(const CVec& x, const GfdmParams& params) {
    check_block_len(params, x.size(), "reshape_v");
    const int k = params.subcarriers;
    const int m = params.subsymbols;
    CMat v(k, m);
    for (int q = 0; q < k; ++q)
        for (int p = 0; p < m; ++p) v(q, p) = x[p + q * m];
    return v;
}

CVec unreshape_v(const CMat& v) {
    const int k = static_cast<int>(v.rows());
    const int m = static_cast<int>(v.cols());
    CVec x(k * m);
    for (int q = 0; q < k; ++q)
        for (int p = 0; p < m; ++p) x[p + q * m] = v(q, p);
    return x;
}

CVec vec_cols(const CMat& d) {
    return Eigen::Map<const CVec>(d.data(), d.size());
}

CMat unvec_cols(const CVec& d, int rows, int cols) {
    if (d.size() != static_cast<Eigen::Index>(rows) * cols)
        throw std::invalid_argument("unvec_cols: size mismatch");
    return Eigen::Map<const CMat>(d.data(), rows, cols);
}

std::vector<int> commutation_perm(int q, int p) {
    if (q < 1 || p < 1) throw std::invalid_argument("commutation_perm: sizes must be >= 1");
    // vec(X^T)[pp + qq*P] = vec(X)[qq + pp*Q] for X in C^{QxP}.
    std::vector<int> perm(static_cast<size_t>(q) * p);
    for (int qq = 0; qq < q; ++qq)
        for (int pp = 0; pp < p; ++pp) perm[pp + qq * p] = qq + pp * q;
    return perm;
}

CVec apply_perm(const std::vector<int>& perm, const CVec& x) {
    if (x.size() != static_cast<Eigen::Index>(perm.size()))
        throw std::invalid_argument("apply_perm: size mismatch");
    CVec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = x[perm[static_cast<size_t>(i)]];
    return out;
}

RMat commutation_matrix(int q, int p) {
    const std::vector<int> perm = commutation_perm(q, p);
    RMat pm = RMat::Zero(q * p, q * p);
    for (int i = 0; i < q * p; ++i) pm(i, perm[static_cast<size_t>(i)]) = 1.0;
    return pm;
}

}  // namespace gfdm
