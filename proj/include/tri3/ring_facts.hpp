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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <tri3/tri_ring.hpp>
#include <tri3/verdict.hpp>

namespace tri3 {

/// A subset of T as an ascending list plus a membership bitmap.
struct ElementSet {
    std::vector<Index> members;
    std::vector<std::uint8_t> flags;

    bool contains(Index x) const noexcept { return x < flags.size() && flags[x] != 0; }
    std::size_t size() const noexcept { return members.size(); }

    static ElementSet from_flags(std::vector<std::uint8_t> flags);
    static ElementSet from_members(std::size_t universe, std::vector<Index> members);
};

/// Z(T) by brute force: z with [z, x] = 0 for every x.
ElementSet center_brute_force(const TriRing3& t, Exec e = Exec::Parallel);

/// Diagonal elements whose blocks intertwine every module element:
/// r_ii m_ij = m_ij r_jj for all m_ij, i < j.
ElementSet center_characterized(const TriRing3& t);

/// Both of the above; throws InternalCharacterizationMismatch if they differ.
ElementSet center_of_T(const TriRing3& t, Exec e = Exec::Parallel);

/// The literal image {[x, y] : x, y in T}.
ElementSet commutator_set(const TriRing3& t, Exec e = Exec::Parallel);

/// Center of the corner ring {x : x = project(x, mask)}, brute force inside
/// the corner.
std::vector<Index> corner_center(const TriRing3& t, BlockMask mask);

/// Projection {project(z, mask) : z in Z(T)}, ascending.
std::vector<Index> center_projection(const TriRing3& t, const ElementSet& center, BlockMask mask);

struct AssumptionVerdict {
    std::string name;
    int index = 0;
    bool prime = false;
    bool holds = false;
    std::vector<Index> projection;
    std::vector<Index> corner_center;
    /// Corner-center elements that no central element projects onto.
    std::vector<Index> missing;
    /// Projections outside the corner center (impossible for a genuine center).
    std::vector<Index> extra;
};

/// Q_i Z(T) Q_i == Z(T_i). Throws InputError for i outside {1,2,3}.
AssumptionVerdict check_standard_assumption(const TriRing3& t, const ElementSet& center, int i);

/// Q'_k Z(T) Q'_k == Z(T'_k) for k in {1,3}. Throws TheoremInvariantViolation
/// when it fails although all three standard assumptions hold.
AssumptionVerdict check_prime_assumption(const TriRing3& t, const ElementSet& center, int k);

/// a -> the unique central z whose block projection is a.
class CentralLift {
public:
    /// Throws TheoremInvariantViolation if two central elements share a
    /// projection.
    static CentralLift build(const TriRing3& t, const ElementSet& center, BlockMask mask);

    std::optional<Index> operator()(Index a) const;
    BlockMask mask() const noexcept { return mask_; }
    const std::map<Index, Index>& table() const noexcept { return table_; }

private:
    BlockMask mask_ = 0;
    std::map<Index, Index> table_;
};

/// The isomorphism between the Q_k and Q'_k projections of Z(T) with
/// a m = m tau(a) (k = 1) or tau(a) m = m a (k = 3) on the connecting module.
struct TauTable {
    int k = 1;
    std::vector<std::pair<Index, Index>> pairs; // ascending by domain element
    std::optional<Index> apply(Index a) const;
    std::optional<Index> inverse(Index b) const;
};

/// Builds tau and verifies well-definedness, injectivity, surjectivity,
/// additivity, multiplicativity and the module identity. Throws
/// TheoremInvariantViolation on any failure.
TauTable compute_tau(const TriRing3& t, const ElementSet& center, int k);

enum class VSet { V12, V23 };

/// V23 = {w in M23 : pair(m, w) = 0 for all m}; V12 dually. Module indices.
std::vector<Index> annihilator_V(const TriRing3& t, VSet which);

enum class SSet { S1, S3, S23, S12 };

const char* to_string(SSet s);

/// Exact block-condition membership tests for the four S sets.
class SSets {
public:
    explicit SSets(const TriRing3& t);
    bool contains(Index x, SSet which) const;

private:
    bool links_from_r11(Index r11, Index r22, Index r33) const;
    bool links_to_r33(Index r11, Index r22, Index r33) const;

    const TriRing3* t_;
    std::vector<std::uint8_t> v12_, v23_, zr1_, zr3_;
};

/// [x, T] inside Z(T) implies x in Z(T), for every x.
Verdict check_lie_closure(const TriRing3& t, const ElementSet& center, Exec e = Exec::Parallel);

/// x = sum of Q_i x Q_j over i <= j, with each corner formed by sandwiching.
Verdict check_peirce(const TriRing3& t);

/// Q_1 T Q'_1 is closed under left multiplication by T_1 and right
/// multiplication by T'_1.
Verdict check_module_closure(const TriRing3& t);

/// Everything the decomposition engine needs about one ring, computed once.
struct RingFacts {
    ElementSet center;
    ElementSet commutators;
    std::vector<AssumptionVerdict> standard; // i = 1, 2, 3
    std::vector<AssumptionVerdict> prime;    // k = 1, 3

    static RingFacts compute(const TriRing3& t, Exec e = Exec::Parallel);
    bool standard_holds() const;
};

} // namespace tri3
