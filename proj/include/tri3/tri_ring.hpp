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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <tri3/bimodule.hpp>
#include <tri3/finite_ring.hpp>

namespace tri3 {

/// Block positions of a 3x3 upper triangular element, as bit flags.
namespace block {
inline constexpr std::uint8_t R11 = 1, M12 = 2, M13 = 4, R22 = 8, M23 = 16, R33 = 32;
inline constexpr std::uint8_t All = 63;
} // namespace block
using BlockMask = std::uint8_t;

/// Block mask of Q_i T Q_j for i, j in {1, 2, 3}; zero when i > j.
BlockMask corner_mask(int i, int j);

/// Mask of Q_i T Q_i (prime = false) or Q'_i T Q'_i (prime = true).
BlockMask diagonal_corner_mask(int i, bool prime);

struct Limits {
    std::size_t ring_cap = kDefaultRingSizeCap;
    /// Largest |T| for which tables are dense and |T|^2 scans are allowed.
    std::size_t scan_cap = 4096;
    /// Largest |T| at all (maps are |T|-long tables).
    std::size_t tri_cap = std::size_t{1} << 22;
    std::size_t witness_cap = 5;
    bool allow_unfaithful = false;
};

struct TriRingConfig {
    std::shared_ptr<const FiniteRing> r1, r2, r3;
    std::shared_ptr<const Bimodule> m12, m13, m23;
    /// pairing[m12 * |M23| + m23] in M13.
    std::vector<Index> pairing;
};

/// Raw component indices in canonical order.
struct TriComponents {
    Index r11 = 0, m12 = 0, m13 = 0, r22 = 0, m23 = 0, r33 = 0;

    friend bool operator==(const TriComponents&, const TriComponents&) = default;
};

class TriRing3;

/// Typed view of an element: each component carries its structure tag.
struct TriElement {
    RingElement r11;
    ModuleElement m12, m13;
    RingElement r22;
    ModuleElement m23;
    RingElement r33;

    friend bool operator==(const TriElement&, const TriElement&) = default;
};

struct FaithfulnessRecord {
    std::string module; // "M12", "M13", "M23"
    Side side = Side::Left;
    bool faithful = true;
    std::optional<Index> witness;
};

/// T = [[R1, M12, M13], [0, R2, M23], [0, 0, R3]] under blockwise matrix
/// operations. Index of an element is the mixed-radix number with digits
/// (r11, m12, m13, r22, m23, r33), r11 least significant.
class TriRing3 {
public:
    /// Validates ring compatibility, the pairing, faithfulness of all three
    /// modules (unless allowed), and re-checks the T ring axioms.
    static std::shared_ptr<const TriRing3> build(TriRingConfig config, Limits limits = {});

    std::size_t size() const noexcept { return n_; }
    const Limits& limits() const noexcept { return limits_; }
    bool dense() const noexcept { return !add_.empty(); }

    Index encode(const TriComponents& c) const noexcept;
    TriComponents decode(Index x) const noexcept;

    Index add(Index x, Index y) const noexcept;
    Index mul(Index x, Index y) const noexcept;
    Index neg(Index x) const noexcept { return neg_.empty() ? neg_blockwise(x) : neg_[x]; }
    Index sub(Index x, Index y) const noexcept { return add(x, neg(y)); }
    Index bracket(Index x, Index y) const noexcept;

    /// Blockwise product computed from the component structures; the dense
    /// tables are filled from this.
    Index mul_blockwise(Index x, Index y) const noexcept;
    Index add_blockwise(Index x, Index y) const noexcept;

    Index zero() const noexcept { return zero_; }
    Index one() const noexcept { return one_; }
    /// Q_i for i in {1, 2, 3}; throws InputError otherwise.
    Index q(int i) const;
    /// Q'_i = I - Q_i.
    Index q_prime(int i) const;

    /// Keeps the blocks in `mask`, zeroes the rest. Equals the idempotent
    /// sandwich for every corner mask.
    Index project(Index x, BlockMask mask) const noexcept;
    /// p x q via the multiplication.
    Index sandwich(Index p, Index x, Index q) const noexcept { return mul(mul(p, x), q); }
    /// Q_i x Q_j.
    Index corner(Index x, int i, int j) const;

    /// All x with project(x, mask) == x, ascending.
    std::vector<Index> elements_of(BlockMask mask) const;
    bool in_blocks(Index x, BlockMask mask) const noexcept { return project(x, mask) == x; }

    TriElement element(Index x) const;
    /// Throws RingMismatch / ModuleMismatch when a component is foreign.
    Index index_of(const TriElement& e) const;
    TriElement t_mul(const TriElement& x, const TriElement& y) const;
    TriElement t_add(const TriElement& x, const TriElement& y) const;
    TriElement t_neg(const TriElement& x) const;

    const FiniteRing& r1() const noexcept { return *cfg_.r1; }
    const FiniteRing& r2() const noexcept { return *cfg_.r2; }
    const FiniteRing& r3() const noexcept { return *cfg_.r3; }
    const Bimodule& m12() const noexcept { return *cfg_.m12; }
    const Bimodule& m13() const noexcept { return *cfg_.m13; }
    const Bimodule& m23() const noexcept { return *cfg_.m23; }
    const Pairing& pairing() const noexcept { return pairing_; }
    const TriRingConfig& config() const noexcept { return cfg_; }

    const std::vector<FaithfulnessRecord>& faithfulness() const noexcept { return faithful_; }
    bool all_faithful() const noexcept;

    /// Number of associativity/distributivity triples re-checked at build and
    /// whether that covered every triple.
    std::uint64_t triples_checked() const noexcept { return triples_checked_; }
    bool triples_exhaustive() const noexcept { return triples_exhaustive_; }

    std::uint64_t hash() const noexcept { return hash_; }
    std::string hash_hex() const { return to_hex(hash_); }

    std::string describe(Index x) const;

    /// Dense tables (empty unless dense()).
    const std::vector<std::uint16_t>& add_table() const noexcept { return add_; }
    const std::vector<std::uint16_t>& mul_table() const noexcept { return mul_; }
    const std::vector<std::uint16_t>& bracket_table() const noexcept { return br_; }
    const std::vector<Index>& neg_table() const noexcept { return neg_; }

    /// Throws SizeLimitExceeded unless |T|^2 scans are allowed.
    void require_scannable(const char* what) const;

private:
    TriRing3() = default;
    Index neg_blockwise(Index x) const noexcept;

    TriRingConfig cfg_;
    Pairing pairing_;
    Limits limits_;
    std::size_t n_ = 0;
    std::array<std::size_t, 6> radix_{}, stride_{};
    Index zero_ = 0, one_ = 0;
    std::vector<std::uint16_t> add_, mul_, br_;
    std::vector<Index> neg_;
    std::vector<FaithfulnessRecord> faithful_;
    std::uint64_t triples_checked_ = 0;
    bool triples_exhaustive_ = false;
    std::uint64_t hash_ = 0;
};

} // namespace tri3
