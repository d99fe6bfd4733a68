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

#include <tri3/ring_facts.hpp>

#include <algorithm>
#include <set>

#include <tri3/error.hpp>
#include <tri3/kernels.hpp>

namespace tri3 {

ElementSet ElementSet::from_flags(std::vector<std::uint8_t> flags) {
    ElementSet s;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) s.members.push_back(static_cast<Index>(i));
    s.flags = std::move(flags);
    return s;
}

ElementSet ElementSet::from_members(std::size_t universe, std::vector<Index> members) {
    std::vector<std::uint8_t> flags(universe, 0);
    for (auto m : members) flags.at(m) = 1;
    return from_flags(std::move(flags));
}

ElementSet center_brute_force(const TriRing3& t, Exec e) {
    std::vector<std::uint8_t> flags(t.size(), 0);
    if (t.dense()) {
        kernels::center_flags(kernels::view_of(t), t.zero(), flags.data(), e);
    } else {
        for (Index z = 0; z < t.size(); ++z) {
            bool central = true;
            for (Index x = 0; x < t.size() && central; ++x) central = t.bracket(z, x) == t.zero();
            flags[z] = central;
        }
    }
    return ElementSet::from_flags(std::move(flags));
}

namespace {

// ok[a * |S| + b] = 1 iff a m = m b for every m.
std::vector<std::uint8_t> intertwiners(const Bimodule& m) {
    const std::size_t nl = m.left_ring().size(), nr = m.right_ring().size();
    std::vector<std::uint8_t> ok(nl * nr, 0);
    for (Index a = 0; a < nl; ++a)
        for (Index b = 0; b < nr; ++b) {
            bool all = true;
            for (Index x = 0; x < m.size() && all; ++x) all = m.act_left(a, x) == m.act_right(x, b);
            ok[a * nr + b] = all;
        }
    return ok;
}

} // namespace

ElementSet center_characterized(const TriRing3& t) {
    const auto ok12 = intertwiners(t.m12());
    const auto ok13 = intertwiners(t.m13());
    const auto ok23 = intertwiners(t.m23());
    const std::size_t n2 = t.r2().size(), n3 = t.r3().size();
    std::vector<std::uint8_t> flags(t.size(), 0);
    for (Index a = 0; a < t.r1().size(); ++a)
        for (Index b = 0; b < n2; ++b) {
            if (!ok12[a * n2 + b]) continue;
            for (Index c = 0; c < n3; ++c)
                if (ok13[a * n3 + c] && ok23[b * n3 + c])
                    flags[t.encode({a, t.m12().zero(), t.m13().zero(), b, t.m23().zero(), c})] = 1;
        }
    return ElementSet::from_flags(std::move(flags));
}

ElementSet center_of_T(const TriRing3& t, Exec e) {
    auto brute = center_brute_force(t, e);
    auto characterized = center_characterized(t);
    if (brute.members != characterized.members) {
        std::string detail;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (brute.flags[i] != characterized.flags[i]) {
                detail = "first disagreement at element " + std::to_string(i) +
                         (brute.flags[i] ? " (central, not characterized)" : " (characterized, not central)");
                break;
            }
        throw InternalCharacterizationMismatch("brute-force center and diagonal characterization differ; " + detail);
    }
    return brute;
}

ElementSet commutator_set(const TriRing3& t, Exec e) {
    std::vector<std::uint8_t> flags(t.size(), 0);
    kernels::commutator_flags(kernels::view_of(t), flags.data(), e);
    return ElementSet::from_flags(std::move(flags));
}

std::vector<Index> corner_center(const TriRing3& t, BlockMask mask) {
    const auto corner = t.elements_of(mask);
    std::vector<Index> out;
    for (auto z : corner) {
        bool central = true;
        for (std::size_t j = 0; j < corner.size() && central; ++j)
            central = t.mul(z, corner[j]) == t.mul(corner[j], z);
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<Index> center_projection(const TriRing3& t, const ElementSet& center, BlockMask mask) {
    std::set<Index> s;
    for (auto z : center.members) s.insert(t.project(z, mask));
    return {s.begin(), s.end()};
}

namespace {

AssumptionVerdict compare_corner(const TriRing3& t, const ElementSet& center, int i, bool prime) {
    AssumptionVerdict v;
    v.index = i;
    v.prime = prime;
    const std::string q = prime ? "Q'" + std::to_string(i) : "Q" + std::to_string(i);
    v.name = q + " Z(T) " + q + " = Z(" + (prime ? "T'" : "T") + std::to_string(i) + ")";
    const BlockMask mask = diagonal_corner_mask(i, prime);
    v.projection = center_projection(t, center, mask);
    v.corner_center = corner_center(t, mask);
    std::set_difference(v.corner_center.begin(), v.corner_center.end(), v.projection.begin(), v.projection.end(),
                        std::back_inserter(v.missing));
    std::set_difference(v.projection.begin(), v.projection.end(), v.corner_center.begin(), v.corner_center.end(),
                        std::back_inserter(v.extra));
    v.holds = v.missing.empty() && v.extra.empty();
    return v;
}

} // namespace

AssumptionVerdict check_standard_assumption(const TriRing3& t, const ElementSet& center, int i) {
    if (i < 1 || i > 3) throw InputError("standard assumption index must be 1, 2 or 3");
    return compare_corner(t, center, i, false);
}

AssumptionVerdict check_prime_assumption(const TriRing3& t, const ElementSet& center, int k) {
    if (k != 1 && k != 3) throw InputError("complemented corner index must be 1 or 3");
    auto v = compare_corner(t, center, k, true);
    if (!v.holds) {
        bool standard = true;
        for (int i = 1; i <= 3; ++i) standard = standard && compare_corner(t, center, i, false).holds;
        if (standard)
            throw TheoremInvariantViolation(v.name + " fails although the standard assumption holds for i = 1,2,3");
    }
    return v;
}

CentralLift CentralLift::build(const TriRing3& t, const ElementSet& center, BlockMask mask) {
    CentralLift l;
    l.mask_ = mask;
    for (auto z : center.members) {
        const Index a = t.project(z, mask);
        auto [it, fresh] = l.table_.emplace(a, z);
        if (!fresh && it->second != z)
            throw TheoremInvariantViolation("central elements " + std::to_string(it->second) + " and " +
                                            std::to_string(z) + " share the corner projection " +
                                            std::to_string(a) + (t.all_faithful() ? "" : " (ring is not faithful)"));
    }
    return l;
}

std::optional<Index> CentralLift::operator()(Index a) const {
    auto it = table_.find(a);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

std::optional<Index> TauTable::apply(Index a) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, Index{0}));
    if (it == pairs.end() || it->first != a) return std::nullopt;
    return it->second;
}

std::optional<Index> TauTable::inverse(Index b) const {
    for (const auto& [a, tb] : pairs)
        if (tb == b) return a;
    return std::nullopt;
}

TauTable compute_tau(const TriRing3& t, const ElementSet& center, int k) {
    if (k != 1 && k != 3) throw InputError("tau is defined for k = 1 or 3");
    const BlockMask dom = diagonal_corner_mask(k, false), cod = diagonal_corner_mask(k, true);
    const auto lift = CentralLift::build(t, center, dom);
    TauTable tau;
    tau.k = k;
    std::set<Index> image;
    for (const auto& [a, z] : lift.table()) {
        const Index b = t.project(z, cod);
        if (!image.insert(b).second)
            throw TheoremInvariantViolation("tau is not injective: two corner elements map to " + std::to_string(b));
        tau.pairs.emplace_back(a, b);
    }
    const auto target = center_projection(t, center, cod);
    if (std::vector<Index>(image.begin(), image.end()) != target)
        throw TheoremInvariantViolation("tau is not onto the complemented projection of Z(T)");
    for (const auto& [a, ta] : tau.pairs)
        for (const auto& [b, tb] : tau.pairs) {
            auto s = tau.apply(t.add(a, b));
            if (!s || *s != t.add(ta, tb))
                throw TheoremInvariantViolation("tau is not additive at (" + std::to_string(a) + "," +
                                                std::to_string(b) + ")");
            auto p = tau.apply(t.mul(a, b));
            if (!p || *p != t.mul(ta, tb))
                throw TheoremInvariantViolation("tau is not multiplicative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + ")");
        }
    const BlockMask module = k == 1 ? (block::M12 | block::M13) : (block::M13 | block::M23);
    const auto ms = t.elements_of(module);
    for (const auto& [a, ta] : tau.pairs)
        for (auto m : ms) {
            const bool ok = k == 1 ? t.mul(a, m) == t.mul(m, ta) : t.mul(ta, m) == t.mul(m, a);
            if (!ok)
                throw TheoremInvariantViolation("tau module identity fails at a=" + std::to_string(a) +
                                                ", m=" + std::to_string(m));
        }
    return tau;
}

std::vector<Index> annihilator_V(const TriRing3& t, VSet which) {
    std::vector<Index> out;
    const auto& P = t.pairing();
    const Index z13 = t.m13().zero();
    if (which == VSet::V23) {
        for (Index w = 0; w < t.m23().size(); ++w) {
            bool all = true;
            for (Index m = 0; m < t.m12().size() && all; ++m) all = P.apply(m, w) == z13;
            if (all) out.push_back(w);
        }
    } else {
        for (Index w = 0; w < t.m12().size(); ++w) {
            bool all = true;
            for (Index n = 0; n < t.m23().size() && all; ++n) all = P.apply(w, n) == z13;
            if (all) out.push_back(w);
        }
    }
    return out;
}

const char* to_string(SSet s) {
    switch (s) {
    case SSet::S1: return "S1";
    case SSet::S3: return "S3";
    case SSet::S23: return "S23";
    case SSet::S12: return "S12";
    }
    return "?";
}

SSets::SSets(const TriRing3& t) : t_(&t) {
    v12_.assign(t.m12().size(), 0);
    v23_.assign(t.m23().size(), 0);
    for (auto w : annihilator_V(t, VSet::V12)) v12_[w] = 1;
    for (auto w : annihilator_V(t, VSet::V23)) v23_[w] = 1;
    zr1_.assign(t.r1().size(), 0);
    zr3_.assign(t.r3().size(), 0);
    for (auto z : t.r1().center()) zr1_[z] = 1;
    for (auto z : t.r3().center()) zr3_[z] = 1;
}

bool SSets::links_from_r11(Index r11, Index r22, Index r33) const {
    const auto& m12 = t_->m12();
    const auto& m13 = t_->m13();
    for (Index m = 0; m < m12.size(); ++m)
        if (m12.act_left(r11, m) != m12.act_right(m, r22)) return false;
    for (Index m = 0; m < m13.size(); ++m)
        if (m13.act_left(r11, m) != m13.act_right(m, r33)) return false;
    return true;
}

bool SSets::links_to_r33(Index r11, Index r22, Index r33) const {
    const auto& m13 = t_->m13();
    const auto& m23 = t_->m23();
    for (Index m = 0; m < m13.size(); ++m)
        if (m13.act_left(r11, m) != m13.act_right(m, r33)) return false;
    for (Index m = 0; m < m23.size(); ++m)
        if (m23.act_left(r22, m) != m23.act_right(m, r33)) return false;
    return true;
}

bool SSets::contains(Index x, SSet which) const {
    const auto c = t_->decode(x);
    const auto& t = *t_;
    const bool z11 = c.r11 == t.r1().zero(), z22 = c.r22 == t.r2().zero(), z33 = c.r33 == t.r3().zero();
    const bool zm12 = c.m12 == t.m12().zero(), zm13 = c.m13 == t.m13().zero(), zm23 = c.m23 == t.m23().zero();
    switch (which) {
    case SSet::S1: return z11 && zm12 && zm13 && z22 && z33 && v23_[c.m23];
    case SSet::S3: return z11 && zm13 && z22 && zm23 && z33 && v12_[c.m12];
    case SSet::S23: return zm12 && zm13 && v23_[c.m23] && zr1_[c.r11] && links_from_r11(c.r11, c.r22, c.r33);
    case SSet::S12: return zm13 && zm23 && v12_[c.m12] && zr3_[c.r33] && links_to_r33(c.r11, c.r22, c.r33);
    }
    return false;
}

Verdict check_lie_closure(const TriRing3& t, const ElementSet& center, Exec e) {
    Verdict v;
    v.property = "[x,T] in Z(T) implies x in Z(T)";
    const auto r = kernels::lie_closure(kernels::view_of(t), center.flags.data(), t.limits().witness_cap, e);
    v.checked = r.checked;
    v.violations = r.violations;
    v.holds = r.violations == 0;
    for (const auto& w : r.witnesses) v.witnesses.push_back({w[0]});
    return v;
}

Verdict check_peirce(const TriRing3& t) {
    Verdict v;
    v.property = "x = sum of Q_i x Q_j, i <= j";
    const Index q[3] = {t.q(1), t.q(2), t.q(3)};
    for (Index x = 0; x < t.size(); ++x) {
        Index sum = t.zero();
        bool lower_zero = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Index c = t.sandwich(q[i], x, q[j]);
                if (i <= j)
                    sum = t.add(sum, c);
                else
                    lower_zero = lower_zero && c == t.zero();
            }
        ++v.checked;
        if (sum != x || !lower_zero) v.fail({x}, t.limits().witness_cap);
    }
    return v;
}

Verdict check_module_closure(const TriRing3& t) {
    Verdict v;
    v.property = "T1 M1 T'1 inside M1";
    const BlockMask m1 = block::M12 | block::M13;
    const auto a_set = t.elements_of(diagonal_corner_mask(1, false));
    const auto b_set = t.elements_of(diagonal_corner_mask(1, true));
    const auto m_set = t.elements_of(m1);
    for (auto m : m_set) {
        for (auto a : a_set) {
            ++v.checked;
            if (!t.in_blocks(t.mul(a, m), m1)) v.fail({a, m}, t.limits().witness_cap);
        }
        for (auto b : b_set) {
            ++v.checked;
            if (!t.in_blocks(t.mul(m, b), m1)) v.fail({m, b}, t.limits().witness_cap);
        }
    }
    return v;
}

RingFacts RingFacts::compute(const TriRing3& t, Exec e) {
    RingFacts f;
    f.center = center_of_T(t, e);
    f.commutators = commutator_set(t, e);
    for (int i = 1; i <= 3; ++i) f.standard.push_back(check_standard_assumption(t, f.center, i));
    for (int k : {1, 3}) f.prime.push_back(check_prime_assumption(t, f.center, k));
    return f;
}

bool RingFacts::standard_holds() const {
    for (const auto& s : standard)
        if (!s.holds) return false;
    return true;
}

} // namespace tri3
