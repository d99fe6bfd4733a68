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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <tri3/endo_map.hpp>
#include <tri3/ring_facts.hpp>
#include <tri3/tri_ring.hpp>

namespace tri3 {

/// Matrices of a fixed rows x cols shape over Z/n whose nonzero entries may
/// only sit at `free` positions (row, col). Index = little-endian mixed radix
/// over `free` in the listed order.
struct MatrixCarrier {
    std::uint32_t modulus = 2;
    std::uint32_t rows = 1, cols = 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;

    std::size_t size() const;
    std::vector<std::uint32_t> matrix(Index i) const;
    /// nullopt when the matrix has a nonzero entry off the free positions.
    std::optional<Index> index(const std::vector<std::uint32_t>& m) const;
};

/// Bimodule whose elements are carrier matrices and whose actions are matrix
/// products with the rings' matrix forms. Throws InputError when a product
/// leaves the carrier shape.
BimoduleSpec matrix_block_bimodule(std::shared_ptr<const FiniteRing> left, std::shared_ptr<const FiniteRing> right,
                                   const MatrixCarrier& carrier);

/// Pairing table from matrix products of carriers.
std::vector<Index> matrix_block_pairing(const MatrixCarrier& c12, const MatrixCarrier& c23,
                                        const MatrixCarrier& c13);

/// R_i = M_ij = Z/n, actions and pairing are multiplication.
TriRingConfig preset_ut3_config(std::uint32_t modulus, std::size_t ring_cap = kDefaultRingSizeCap);
std::shared_ptr<const TriRing3> preset_ut3(std::uint32_t modulus, Limits limits = {});

/// The 6x6 block ring: R1 = M_2(Z/n), R2 = R3 = scalar 2x2 matrices,
/// M12 = M13 = second-column pairs (c, d), M23 = the (1,2) entry c.
TriRingConfig preset_example21_config(std::uint32_t modulus, std::size_t ring_cap = kDefaultRingSizeCap);
std::shared_ptr<const TriRing3> preset_example21(std::uint32_t modulus, Limits limits = {});

/// 6x6 matrix of an element of the example21 preset, row-major.
std::vector<std::uint32_t> example21_embed(const TriRing3& t, Index x);

/// Recipe for phi = inner_derivation(a) + gamma.
///
/// Draw order from SplitMix64(seed): first the inner element (only when
/// use_inner and no explicit `inner`), then one draw per non-commutator x in
/// ascending order choosing gamma(x) from Z(T) (only when use_central).
struct MldRecipe {
    std::uint64_t seed = 0;
    std::optional<Index> inner;
    bool use_inner = true;
    bool use_central = true;
};

/// Verified to be a multiplicative Lie derivation before it is returned
/// (GenerationFailed otherwise).
EndoMap gen_mld(const TriRing3& t, const RingFacts& facts, const MldRecipe& recipe, Exec e = Exec::Parallel);

/// "squaring" (x -> x x), "constant_I" (x -> I), "identity".
const std::vector<std::string>& non_mld_variants();

/// Returns the first of the requested variant (or all variants in order)
/// that fails the MLD identity; GenerationFailed if none does.
EndoMap gen_non_mld(const TriRing3& t, const std::string& variant = "", Exec e = Exec::Parallel);

} // namespace tri3
