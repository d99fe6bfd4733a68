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

#include <tri3/bimodule.hpp>

#include <tri3/error.hpp>

namespace tri3 {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::shared_ptr<const Bimodule> Bimodule::build(BimoduleSpec spec, std::size_t size_cap) {
    if (!spec.left || !spec.right) throw InputError("bimodule spec is missing a ring");
    const std::size_t n = spec.size;
    if (n == 0) throw InputError("bimodule carrier is empty");
    if (n > size_cap)
        throw SizeLimitExceeded("bimodule of size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(size_cap));
    const std::size_t nr = spec.left->size(), ns = spec.right->size();
    if (spec.add.size() != n * n) throw InputError("bimodule addition table has wrong size");
    if (spec.left_action.size() != nr * n) throw InputError("bimodule left action table has wrong size");
    if (spec.right_action.size() != n * ns) throw InputError("bimodule right action table has wrong size");

    const char* where = "bimodule";
    const auto& R = *spec.left;
    const auto& S = *spec.right;
    auto A = [&](std::size_t a, std::size_t b) { return spec.add[a * n + b]; };
    auto L = [&](std::size_t r, std::size_t m) { return spec.left_action[r * n + m]; };
    auto Rt = [&](std::size_t m, std::size_t s) { return spec.right_action[m * ns + s]; };

    for (auto v : spec.add)
        if (v >= n) throw AxiomViolation("addition closure", {v}, where);
    for (auto v : spec.left_action)
        if (v >= n) throw AxiomViolation("left action closure", {v}, where);
    for (auto v : spec.right_action)
        if (v >= n) throw AxiomViolation("right action closure", {v}, where);
    if (spec.zero >= n) throw AxiomViolation("zero index in range", {spec.zero}, where);
    const std::size_t z = spec.zero;

    for (std::size_t a = 0; a < n; ++a)
        if (A(z, a) != a || A(a, z) != a) throw AxiomViolation("additive identity", {a}, where);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", {a, b}, where);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (A(A(a, b), c) != A(a, A(b, c)))
                    throw AxiomViolation("additive associativity", {a, b, c}, where);
    std::vector<Index> neg(n, static_cast<Index>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) == z) {
                neg[a] = static_cast<Index>(b);
                break;
            }
        if (neg[a] == n) throw AxiomViolation("additive inverse", {a}, where);
    }

    for (std::size_t m = 0; m < n; ++m)
        if (L(R.one(), m) != m) throw AxiomViolation("left unit", {m}, where);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t r2 = 0; r2 < nr; ++r2)
            for (std::size_t m = 0; m < n; ++m) {
                if (L(R.add(static_cast<Index>(r), static_cast<Index>(r2)), m) != A(L(r, m), L(r2, m)))
                    throw AxiomViolation("(r+r')m = rm + r'm", {r, r2, m}, where);
                if (L(R.mul(static_cast<Index>(r), static_cast<Index>(r2)), m) != L(r, L(r2, m)))
                    throw AxiomViolation("(rr')m = r(r'm)", {r, r2, m}, where);
            }
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t m2 = 0; m2 < n; ++m2)
                if (L(r, A(m, m2)) != A(L(r, m), L(r, m2)))
                    throw AxiomViolation("r(m+m') = rm + rm'", {r, m, m2}, where);

    for (std::size_t m = 0; m < n; ++m)
        if (Rt(m, S.one()) != m) throw AxiomViolation("right unit", {m}, where);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t s2 = 0; s2 < ns; ++s2) {
                if (Rt(m, S.add(static_cast<Index>(s), static_cast<Index>(s2))) != A(Rt(m, s), Rt(m, s2)))
                    throw AxiomViolation("m(s+s') = ms + ms'", {m, s, s2}, where);
                if (Rt(m, S.mul(static_cast<Index>(s), static_cast<Index>(s2))) != Rt(Rt(m, s), s2))
                    throw AxiomViolation("m(ss') = (ms)s'", {m, s, s2}, where);
            }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t m2 = 0; m2 < n; ++m2)
            for (std::size_t s = 0; s < ns; ++s)
                if (Rt(A(m, m2), s) != A(Rt(m, s), Rt(m2, s)))
                    throw AxiomViolation("(m+m')s = ms + m's", {m, m2, s}, where);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t s = 0; s < ns; ++s)
                if (Rt(L(r, m), s) != L(r, Rt(m, s))) throw AxiomViolation("(rm)s = r(ms)", {r, m, s}, where);

    std::shared_ptr<Bimodule> out(new Bimodule());
    out->spec_ = std::move(spec);
    out->n_ = n;
    out->right_size_ = ns;
    out->neg_ = std::move(neg);
    out->id_ = next_structure_id();
    return out;
}

ModuleElement Bimodule::element(Index i) const {
    if (i >= n_) throw InputError("module element index " + std::to_string(i) + " out of range");
    return {this, i};
}

std::optional<Index> smallest_annihilator(std::size_t ring_size, Index ring_zero, std::size_t module_size,
                                          const std::function<bool(Index, Index)>& kills) {
    for (std::size_t r = 0; r < ring_size; ++r) {
        if (r == ring_zero) continue;
        bool all = true;
        for (std::size_t m = 0; m < module_size && all; ++m)
            all = kills(static_cast<Index>(r), static_cast<Index>(m));
        if (all) return static_cast<Index>(r);
    }
    return std::nullopt;
}

FaithfulnessVerdict Bimodule::check_faithful(Side side) const {
    FaithfulnessVerdict v;
    v.side = side;
    if (side == Side::Left) {
        v.witness = smallest_annihilator(left_ring().size(), left_ring().zero(), n_,
                                         [this](Index r, Index m) { return act_left(r, m) == zero(); });
    } else {
        v.witness = smallest_annihilator(right_ring().size(), right_ring().zero(), n_,
                                         [this](Index s, Index m) { return act_right(m, s) == zero(); });
    }
    v.faithful = !v.witness.has_value();
    return v;
}

void Bimodule::hash_into(Fnv1a& h) const {
    h.bytes("bimodule");
    h.u64(n_);
    h.u32(spec_.zero);
    h.u32s(spec_.add);
    h.u32s(spec_.left_action);
    h.u32s(spec_.right_action);
}

namespace {
const Bimodule& same_module(ModuleElement a, ModuleElement b) {
    if (a.module == nullptr || a.module != b.module)
        throw ModuleMismatch("module elements belong to different modules");
    return *a.module;
}
} // namespace

ModuleElement operator+(ModuleElement a, ModuleElement b) {
    const auto& m = same_module(a, b);
    return {&m, m.add(a.index, b.index)};
}

ModuleElement operator-(ModuleElement a, ModuleElement b) {
    const auto& m = same_module(a, b);
    return {&m, m.sub(a.index, b.index)};
}

ModuleElement operator-(ModuleElement a) {
    if (a.module == nullptr) throw ModuleMismatch("untagged module element");
    return {a.module, a.module->neg(a.index)};
}

ModuleElement operator*(RingElement r, ModuleElement m) {
    if (m.module == nullptr || r.ring != &m.module->left_ring())
        throw RingMismatch("left action by a ring that is not the module's left ring");
    return {m.module, m.module->act_left(r.index, m.index)};
}

ModuleElement operator*(ModuleElement m, RingElement s) {
    if (m.module == nullptr || s.ring != &m.module->right_ring())
        throw RingMismatch("right action by a ring that is not the module's right ring");
    return {m.module, m.module->act_right(m.index, s.index)};
}

Pairing Pairing::build(std::shared_ptr<const Bimodule> m12, std::shared_ptr<const Bimodule> m23,
                       std::shared_ptr<const Bimodule> m13, std::vector<Index> table) {
    if (!m12 || !m23 || !m13) throw InputError("pairing is missing a module");
    if (&m12->left_ring() != &m13->left_ring())
        throw ModuleMismatch("pairing: M12 and M13 must share the left ring R1");
    if (&m12->right_ring() != &m23->left_ring())
        throw ModuleMismatch("pairing: right ring of M12 must be the left ring of M23 (R2)");
    if (&m23->right_ring() != &m13->right_ring())
        throw ModuleMismatch("pairing: M23 and M13 must share the right ring R3");
    const std::size_t a = m12->size(), b = m23->size(), c = m13->size();
    if (table.size() != a * b) throw InputError("pairing table has wrong size");
    for (auto v : table)
        if (v >= c) throw AxiomViolation("pairing closure", {v}, "pairing");

    auto P = [&](std::size_t m, std::size_t n) { return table[m * b + n]; };
    const char* where = "pairing";
    const auto& R1 = m12->left_ring();
    const auto& R2 = m12->right_ring();
    const auto& R3 = m23->right_ring();

    for (std::size_t m = 0; m < a; ++m)
        for (std::size_t m2 = 0; m2 < a; ++m2)
            for (std::size_t n = 0; n < b; ++n)
                if (P(m12->add(static_cast<Index>(m), static_cast<Index>(m2)), n) != m13->add(P(m, n), P(m2, n)))
                    throw AxiomViolation("pair(m+m',n) = pair(m,n) + pair(m',n)", {m, m2, n}, where);
    for (std::size_t m = 0; m < a; ++m)
        for (std::size_t n = 0; n < b; ++n)
            for (std::size_t n2 = 0; n2 < b; ++n2)
                if (P(m, m23->add(static_cast<Index>(n), static_cast<Index>(n2))) != m13->add(P(m, n), P(m, n2)))
                    throw AxiomViolation("pair(m,n+n') = pair(m,n) + pair(m,n')", {m, n, n2}, where);
    for (std::size_t m = 0; m < a; ++m)
        for (std::size_t r = 0; r < R2.size(); ++r)
            for (std::size_t n = 0; n < b; ++n)
                if (P(m12->act_right(static_cast<Index>(m), static_cast<Index>(r)), n) !=
                    P(m, m23->act_left(static_cast<Index>(r), static_cast<Index>(n))))
                    throw AxiomViolation("pair(m*r2,n) = pair(m,r2*n)", {m, r, n}, where);
    for (std::size_t r = 0; r < R1.size(); ++r)
        for (std::size_t m = 0; m < a; ++m)
            for (std::size_t n = 0; n < b; ++n)
                if (P(m12->act_left(static_cast<Index>(r), static_cast<Index>(m)), n) !=
                    m13->act_left(static_cast<Index>(r), P(m, n)))
                    throw AxiomViolation("pair(r1*m,n) = r1*pair(m,n)", {r, m, n}, where);
    for (std::size_t m = 0; m < a; ++m)
        for (std::size_t n = 0; n < b; ++n)
            for (std::size_t s = 0; s < R3.size(); ++s)
                if (P(m, m23->act_right(static_cast<Index>(n), static_cast<Index>(s))) !=
                    m13->act_right(P(m, n), static_cast<Index>(s)))
                    throw AxiomViolation("pair(m,n*r3) = pair(m,n)*r3", {m, n, s}, where);

    Pairing p;
    p.m12_ = std::move(m12);
    p.m23_ = std::move(m23);
    p.m13_ = std::move(m13);
    p.table_ = std::move(table);
    p.n23_ = b;
    return p;
}

ModuleElement Pairing::operator()(ModuleElement m, ModuleElement n) const {
    if (m.module != m12_.get() || n.module != m23_.get())
        throw ModuleMismatch("pair() expects an M12 element and an M23 element");
    return {m13_.get(), apply(m.index, n.index)};
}

} // namespace tri3
