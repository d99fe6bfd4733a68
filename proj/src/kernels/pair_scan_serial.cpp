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

// Reference scans: plain double loops over (x, y) in row-major order.

#include <tri3/error.hpp>
#include <tri3/kernels.hpp>

namespace tri3::kernels {

DenseView view_of(const TriRing3& t) {
    t.require_scannable("pair scan");
    return {t.size(), t.add_table().data(), t.mul_table().data(), t.bracket_table().data(), t.neg_table().data()};
}

namespace serial {

namespace {

template <class Bad>
PairScan scan(std::size_t n, std::size_t cap, Bad bad) {
    PairScan r;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            ++r.checked;
            if (bad(x, y)) {
                ++r.violations;
                if (r.witnesses.size() < cap) r.witnesses.push_back({static_cast<Index>(x), static_cast<Index>(y)});
            }
        }
    return r;
}

} // namespace

PairScan mld(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return scan(n, cap, [&](std::size_t x, std::size_t y) {
        const Index lhs = phi[v.br[x * n + y]];
        const Index a = v.br[phi[x] * n + y];
        const Index b = v.br[x * n + phi[y]];
        return lhs != v.add[a * n + b];
    });
}

PairScan additive(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return scan(n, cap, [&](std::size_t x, std::size_t y) {
        return phi[v.add[x * n + y]] != v.add[phi[x] * n + phi[y]];
    });
}

PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap) {
    const std::size_t n = v.n;
    return scan(n, cap, [&](std::size_t x, std::size_t y) {
        const Index a = v.mul[phi[x] * n + y];
        const Index b = v.mul[x * n + phi[y]];
        return phi[v.mul[x * n + y]] != v.add[a * n + b];
    });
}

void center_flags(const DenseView& v, Index zero, std::uint8_t* out) {
    const std::size_t n = v.n;
    for (std::size_t x = 0; x < n; ++x) {
        bool central = true;
        for (std::size_t y = 0; y < n && central; ++y) central = v.br[x * n + y] == zero;
        out[x] = central ? 1 : 0;
    }
}

void commutator_flags(const DenseView& v, std::uint8_t* out) {
    const std::size_t n = v.n;
    for (std::size_t i = 0; i < n; ++i) out[i] = 0;
    for (std::size_t i = 0; i < n * n; ++i) out[v.br[i]] = 1;
}

PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap) {
    const std::size_t n = v.n;
    PairScan r;
    for (std::size_t x = 0; x < n; ++x) {
        bool inside = true;
        for (std::size_t y = 0; y < n && inside; ++y) inside = center[v.br[x * n + y]] != 0;
        ++r.checked;
        if (inside && !center[x]) {
            ++r.violations;
            if (r.witnesses.size() < cap) r.witnesses.push_back({static_cast<Index>(x), static_cast<Index>(x)});
        }
    }
    return r;
}

} // namespace serial

PairScan mld(const DenseView& v, const Index* phi, std::size_t cap, Exec e) {
    return e == Exec::Serial ? serial::mld(v, phi, cap) : omp::mld(v, phi, cap);
}

PairScan additive(const DenseView& v, const Index* phi, std::size_t cap, Exec e) {
    return e == Exec::Serial ? serial::additive(v, phi, cap) : omp::additive(v, phi, cap);
}

PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap, Exec e) {
    return e == Exec::Serial ? serial::leibniz(v, phi, cap) : omp::leibniz(v, phi, cap);
}

void center_flags(const DenseView& v, Index zero, std::uint8_t* out, Exec e) {
    e == Exec::Serial ? serial::center_flags(v, zero, out) : omp::center_flags(v, zero, out);
}

void commutator_flags(const DenseView& v, std::uint8_t* out, Exec e) {
    e == Exec::Serial ? serial::commutator_flags(v, out) : omp::commutator_flags(v, out);
}

PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap, Exec e) {
    return e == Exec::Serial ? serial::lie_closure(v, center, cap) : omp::lie_closure(v, center, cap);
}

} // namespace tri3::kernels
