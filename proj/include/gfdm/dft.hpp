// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#pragma once

#include "gfdm/types.hpp"

namespace gfdm {

// DFT convention used throughout the library: the forward transform is the
// unnormalized matrix [F_Q]_{a,b} = exp(-j 2 pi a b / Q), the inverse is
// (1/Q) F_Q^H, so F_Q^H F_Q = Q I and idft(dft(x)) == x.

CVec dft(const CVec& x);
CVec idft(const CVec& x);

void dft_inplace(cplx* data, int n);
void idft_inplace(cplx* data, int n);

// Column/row transforms of a matrix, same convention per column/row.
void dft_cols_inplace(CMat& x);
void idft_cols_inplace(CMat& x);
void dft_rows_inplace(CMat& x);
void idft_rows_inplace(CMat& x);

/// Dense F_Q; intended for oracles and small verification problems.
CMat dft_matrix(int q);

}  // namespace gfdm
