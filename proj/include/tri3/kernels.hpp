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

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <tri3/tri_ring.hpp>
#include <tri3/verdict.hpp>

/// |T|^2 scans over the dense tables. `omp` is the production path, `serial`
/// the reference it is tested against. Both return witnesses in row-major
/// (x, y) order, so results are identical for any thread count.
namespace tri3::kernels {

struct DenseView {
    std::size_t n = 0;
    const std::uint16_t* add = nullptr;
    const std::uint16_t* mul = nullptr;
    const std::uint16_t* br = nullptr;
    const Index* neg = nullptr;
};

/// Throws SizeLimitExceeded when the ring has no dense tables.
DenseView view_of(const TriRing3& t);

struct PairScan {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::array<Index, 2>> witnesses;
};

namespace omp {
/// phi([x,y]) == [phi(x),y] + [x,phi(y)]
PairScan mld(const DenseView& v, const Index* phi, std::size_t cap);
/// phi(x+y) == phi(x) + phi(y)
PairScan additive(const DenseView& v, const Index* phi, std::size_t cap);
/// phi(xy) == phi(x)y + x phi(y)
PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap);
/// out[x] = 1 iff [x, y] = 0 for all y.
void center_flags(const DenseView& v, Index zero, std::uint8_t* out);
/// out[c] = 1 iff c = [x, y] for some x, y.
void commutator_flags(const DenseView& v, std::uint8_t* out);
/// Rows x with [x, T] inside the center; witnesses are such x (as (x, x))
/// that are not themselves central.
PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap);
} // namespace omp

namespace serial {
PairScan mld(const DenseView& v, const Index* phi, std::size_t cap);
PairScan additive(const DenseView& v, const Index* phi, std::size_t cap);
PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap);
void center_flags(const DenseView& v, Index zero, std::uint8_t* out);
void commutator_flags(const DenseView& v, std::uint8_t* out);
PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap);
} // namespace serial

PairScan mld(const DenseView& v, const Index* phi, std::size_t cap, Exec e);
PairScan additive(const DenseView& v, const Index* phi, std::size_t cap, Exec e);
PairScan leibniz(const DenseView& v, const Index* phi, std::size_t cap, Exec e);
void center_flags(const DenseView& v, Index zero, std::uint8_t* out, Exec e);
void commutator_flags(const DenseView& v, std::uint8_t* out, Exec e);
PairScan lie_closure(const DenseView& v, const std::uint8_t* center, std::size_t cap, Exec e);

} // namespace tri3::kernels
