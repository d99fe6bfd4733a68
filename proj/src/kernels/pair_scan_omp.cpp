/*
 * Copyright 2026 The tri3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// OpenMP scans. Each thread owns a contiguous block of rows; per-thread
// results are merged in thread order, which is row order.

#include <omp.h>

#include <tri3/kernels.hpp>

namespace tri3::kernels::omp {

namespace {

template <class RowScan>
PairScan by_rows(std::size_t n, std::size_t cap, RowScan row) {
    const int max_threads = omp_get_max_threads();
    std::vector<PairScan> parts(static_cast<std::size_t>(max_threads));
#pragma omp parallel num_threads(max_threads)
    {
        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        const auto nt = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t lo = n * tid / nt, hi = n * (tid + 1) / nt;
        PairScan& part = parts[tid];
        for (std::size_t x = lo; x < hi; ++x) row(x, part, cap);
    }
    PairScan out;
    for (auto& p : parts) {
        out.checked += p.checked;
        out.violations += p.violations;
        for (const auto& w : p.witnesses)
            if (out.witnesses.size() < cap) out.witnesses.push_back(w);
    }
    return out;
}

inline void note(PairScan& p, std::size_t x, std::size_t y, std::size_t cap) {
    ++p.violations;
    if (p.witnesses.size() < cap) p.witnesses.push_back({static_cast<Index>(x), static_cast<Index>(y)});
}

} // namespace

PairScan mld(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return by_rows(n, cap, [&](std::size_t x, PairScan& p, std::size_t c) {
        const std::uint16_t* brx = v.br + x * n;
        const std::uint16_t* brpx = v.br + static_cast<std::size_t>(phi[x]) * n;
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t a = brpx[y], b = brx[phi[y]];
            if (phi[brx[y]] != v.add[a * n + b]) note(p, x, y, c);
        }
        p.checked += n;
    });
}

PairScan additive(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return by_rows(n, cap, [&](std::size_t x, PairScan& p, std::size_t c) {
        const std::uint16_t* addx = v.add + x * n;
        const std::uint16_t* addpx = v.add + static_cast<std::size_t>(phi[x]) * n;
        for (std::size_t y = 0; y < n; ++y)
            if (phi[addx[y]] != addpx[phi[y]]) note(p, x, y, c);
        p.checked += n;
    });
}

PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return by_rows(n, cap, [&](std::size_t x, PairScan& p, std::size_t c) {
        const std::uint16_t* mulx = v.mul + x * n;
        const std::uint16_t* mulpx = v.mul + static_cast<std::size_t>(phi[x]) * n;
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t a = mulpx[y], b = mulx[phi[y]];
            if (phi[mulx[y]] != v.add[a * n + b]) note(p, x, y, c);
        }
        p.checked += n;
    });
}

void center_flags(const DenseView& v, Index zero, std::uint8_t* out) {
    const auto n = static_cast<std::ptrdiff_t>(v.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
        const std::uint16_t* row = v.br + static_cast<std::size_t>(x) * v.n;
        bool central = true;
        for (std::size_t y = 0; y < v.n && central; ++y) central = row[y] == zero;
        out[x] = central ? 1 : 0;
    }
}

void commutator_flags(const DenseView& v, std::uint8_t* out) {
    const std::size_t n = v.n;
    const int max_threads = omp_get_max_threads();
    std::vector<std::vector<std::uint8_t>> parts(static_cast<std::size_t>(max_threads));
#pragma omp parallel num_threads(max_threads)
    {
        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        const auto nt = static_cast<std::size_t>(omp_get_num_threads());
        auto& mine = parts[tid];
        mine.assign(n, 0);
        const std::size_t lo = n * n * tid / nt, hi = n * n * (tid + 1) / nt;
        for (std::size_t i = lo; i < hi; ++i) mine[v.br[i]] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = 0;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.size(); ++i) out[i] |= p[i];
}

PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap) {
    const std::size_t n = v.n;
    return by_rows(n, cap, [&](std::size_t x, PairScan& p, std::size_t c) {
        const std::uint16_t* row = v.br + x * n;
        bool inside = true;
        for (std::size_t y = 0; y < n && inside; ++y) inside = center[row[y]] != 0;
        ++p.checked;
        if (inside && !center[x]) note(p, x, x, c);
    });
}

} // namespace tri3::kernels::omp
