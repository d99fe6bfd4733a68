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

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <tri3/finite_ring.hpp>

namespace tri3 {

/// Tables for an (R, S)-bimodule over a finite abelian group. All tables are
/// flattened row-major:
///   add[m * size + m2], left_action[r * size + m], right_action[m * |S| + s].
struct BimoduleSpec {
    std::shared_ptr<const FiniteRing> left;
    std::shared_ptr<const FiniteRing> right;
    std::size_t size = 0;
    std::vector<Index> add;
    Index zero = 0;
    std::vector<Index> left_action;
    std::vector<Index> right_action;
};

enum class Side { Left, Right };

const char* to_string(Side s);

struct FaithfulnessVerdict {
    Side side = Side::Left;
    bool faithful = true;
    /// Smallest nonzero ring element annihilating the whole module.
    std::optional<Index> witness;
};

class Bimodule;

struct ModuleElement {
    const Bimodule* module = nullptr;
    Index index = 0;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

ModuleElement operator+(ModuleElement a, ModuleElement b);
ModuleElement operator-(ModuleElement a, ModuleElement b);
ModuleElement operator-(ModuleElement a);
/// Left action; the ring must be the module's left ring.
ModuleElement operator*(RingElement r, ModuleElement m);
/// Right action; the ring must be the module's right ring.
ModuleElement operator*(ModuleElement m, RingElement s);

class Bimodule {
public:
    /// Verifies the abelian group axioms and every action axiom exhaustively.
    static std::shared_ptr<const Bimodule> build(BimoduleSpec spec,
                                                 std::size_t size_cap = kDefaultRingSizeCap);

    std::size_t size() const noexcept { return n_; }
    Index zero() const noexcept { return spec_.zero; }
    Index add(Index a, Index b) const noexcept { return spec_.add[a * n_ + b]; }
    Index neg(Index a) const noexcept { return neg_[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
    Index act_left(Index r, Index m) const noexcept { return spec_.left_action[r * n_ + m]; }
    Index act_right(Index m, Index s) const noexcept { return spec_.right_action[m * right_size_ + s]; }

    const FiniteRing& left_ring() const noexcept { return *spec_.left; }
    const FiniteRing& right_ring() const noexcept { return *spec_.right; }
    const std::shared_ptr<const FiniteRing>& left_ring_ptr() const noexcept { return spec_.left; }
    const std::shared_ptr<const FiniteRing>& right_ring_ptr() const noexcept { return spec_.right; }
    const BimoduleSpec& spec() const noexcept { return spec_; }

    ModuleElement element(Index i) const;

    /// Left: r*M = 0 implies r = 0. Right: M*s = 0 implies s = 0.
    FaithfulnessVerdict check_faithful(Side side) const;

    std::uint64_t id() const noexcept { return id_; }
    void hash_into(Fnv1a& h) const;

private:
    Bimodule() = default;

    BimoduleSpec spec_;
    std::size_t n_ = 0, right_size_ = 0;
    std::vector<Index> neg_;
    std::uint64_t id_ = 0;
};

/// Smallest nonzero r in [0, ring_size) with kills(r, m) for every m in
/// [0, module_size), or nullopt. `kills(r, m)` must report whether the action
/// of r on m is zero.
std::optional<Index> smallest_annihilator(std::size_t ring_size, Index ring_zero, std::size_t module_size,
                                          const std::function<bool(Index, Index)>& kills);

/// Balanced biadditive map M12 x M23 -> M13, table[m * |M23| + n].
class Pairing {
public:
    /// Checks ring compatibility (ModuleMismatch) and, exhaustively,
    /// biadditivity, R2-balance, and (R1, R3)-bilinearity (AxiomViolation).
    static Pairing build(std::shared_ptr<const Bimodule> m12, std::shared_ptr<const Bimodule> m23,
                         std::shared_ptr<const Bimodule> m13, std::vector<Index> table);

    Index apply(Index m, Index n) const noexcept { return table_[m * n23_ + n]; }
    ModuleElement operator()(ModuleElement m, ModuleElement n) const;

    const std::vector<Index>& table() const noexcept { return table_; }

private:
    std::shared_ptr<const Bimodule> m12_, m23_, m13_;
    std::vector<Index> table_;
    std::size_t n23_ = 0;
};

} // namespace tri3
