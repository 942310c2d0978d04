// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include <vector>

#include "gfdm/types.hpp"

namespace gfdm {

// Two-dimensional view of a frequency-domain block: out(q, p) = x[p + q*M],
// q indexing the K rows and p the M columns. unreshape_v is its exact inverse.
CMat reshape_v(const CVec& x, const GfdmParams& params);
CVec unreshape_v(const CMat& v);

// Column-major vectorization, d[k + m*K] = D(k, m), and its inverse.
CVec vec_cols(const CMat& d);
CMat unvec_cols(const CVec& d, int rows, int cols);

// Commutation permutation for Q x P matrices: vec(X^T) = vec(X) reindexed,
// out[i] = in[perm[i]].
std::vector<int> commutation_perm(int q, int p);
CVec apply_perm(const std::vector<int>& perm, const CVec& x);

/// Dense 0/1 commutation matrix P_{Q,P} with vec(X^T) = P_{Q,P} vec(X).
RMat commutation_matrix(int q, int p);

}  // namespace gfdm
