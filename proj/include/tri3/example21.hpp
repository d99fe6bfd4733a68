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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <tri3/tri_ring.hpp>

namespace tri3 {

/// The 6x6 ring split as [[B, M], [L, C]] with B of size p x p.
struct PartitionCheck {
    int p = 0;
    /// L = 0 for every element.
    bool lower_zero = true;
    std::optional<Index> lower_witness;
    std::size_t b_size = 0, m_size = 0, c_size = 0;
    /// |A| == |B| |M| |C|: every block triple is an element.
    bool is_product = true;
    /// Only meaningful when triangular-shaped and a product.
    bool checked_faithfulness = false;
    bool left_faithful = true, right_faithful = true;
    /// Indices (in T) of the smallest nonzero annihilators.
    std::optional<Index> left_witness, right_witness;
    std::string note;
};

struct NotTriangularReport {
    std::uint32_t modulus = 0;
    std::vector<PartitionCheck> partitions; // p = 1..5
    /// (4+2): M not faithful as a left B-module.
    bool way1_not_faithful = false;
    Index way1_witness = 0;
    std::vector<std::uint32_t> way1_witness_matrix;
    /// (2+4): N not faithful as a right C-module.
    bool way2_not_faithful = false;
    Index way2_witness = 0;
    std::vector<std::uint32_t> way2_witness_matrix;
    /// No partition makes the ring a faithful triangular ring.
    bool not_triangular = false;
};

/// Runs every 2-block partition of the example21 preset. Throws InputError
/// for other rings and TheoremInvariantViolation when any outcome
/// contradicts the example (including witness shape).
NotTriangularReport check_not_triangular_example21(const TriRing3& t);

} // namespace tri3
