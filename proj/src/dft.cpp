// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the gfdmlib authors

#include "gfdm/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <vector>

namespace gfdm {
namespace {

// One in-place plan pair per transform size, created lazily. Plan creation is
// not thread safe in FFTW, execution via fftw_execute_dft is.
class FftEngine {
  public:
    static FftEngine& instance() {
        static FftEngine engine;
        return engine;
    }

    ~FftEngine() {
        for (auto& [n, p] : cache_) {
            fftw_destroy_plan(p.fwd);
            fftw_destroy_plan(p.bwd);
        }
    }

    void execute(cplx* data, int n, bool forward) {
        const Plans& p = plans(n);
        fftw_complex* d = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(forward ? p.fwd : p.bwd, d, d);
    }

  private:
    struct Plans {
        fftw_plan fwd = nullptr;
        fftw_plan bwd = nullptr;
    };

    const Plans& plans(int n) {
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(n);
            if (it != cache_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<size_t>(n));
        fftw_complex* s = reinterpret_cast<fftw_complex*>(scratch.data());
        Plans p;
        p.fwd = fftw_plan_dft_1d(n, s, s, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.bwd = fftw_plan_dft_1d(n, s, s, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        return cache_.emplace(n, p).first->second;
    }

    std::shared_mutex mutex_;
    std::map<int, Plans> cache_;
};

}  // namespace

void dft_inplace(cplx* data, int n) {
    if (n == 1) return;
    FftEngine::instance().execute(data, n, true);
}

void idft_inplace(cplx* data, int n) {
    if (n == 1) return;
    FftEngine::instance().execute(data, n, false);
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) data[i] *= scale;
}

CVec dft(const CVec& x) {
    CVec out = x;
    dft_inplace(out.data(), static_cast<int>(out.size()));
    return out;
}

CVec idft(const CVec& x) {
    CVec out = x;
    idft_inplace(out.data(), static_cast<int>(out.size()));
    return out;
}

void dft_cols_inplace(CMat& x) {
    const int n = static_cast<int>(x.rows());
    for (Eigen::Index c = 0; c < x.cols(); ++c) dft_inplace(x.col(c).data(), n);
}

void idft_cols_inplace(CMat& x) {
    const int n = static_cast<int>(x.rows());
    for (Eigen::Index c = 0; c < x.cols(); ++c) idft_inplace(x.col(c).data(), n);
}

void dft_rows_inplace(CMat& x) {
    CMat t = x.transpose();
    dft_cols_inplace(t);
    x = t.transpose();
}

void idft_rows_inplace(CMat& x) {
    CMat t = x.transpose();
    idft_cols_inplace(t);
    x = t.transpose();
}

CMat dft_matrix(int q) {
    CMat f(q, q);
    const double w = -2.0 * std::numbers::pi / q;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            f(a, b) = std::polar(1.0, w * static_cast<double>(a) * static_cast<double>(b));
    return f;
}

}  // namespace gfdm
