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

#include <tri3/tri_ring.hpp>

#include <tri3/error.hpp>

namespace tri3 {

BlockMask corner_mask(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw InputError("corner indices must lie in {1,2,3}");
    static constexpr BlockMask table[3][3] = {
        {block::R11, block::M12, block::M13},
        {0, block::R22, block::M23},
        {0, 0, block::R33},
    };
    return table[i - 1][j - 1];
}

BlockMask diagonal_corner_mask(int i, bool prime) {
    if (i < 1 || i > 3) throw InputError("idempotent index must lie in {1,2,3}");
    if (!prime) return corner_mask(i, i);
    BlockMask m = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            if (a != i && b != i) m |= corner_mask(a, b);
    return m;
}

namespace {

void check_attached(const Bimodule& m, const FiniteRing& left, const FiniteRing& right, const char* name) {
    if (&m.left_ring() != &left || &m.right_ring() != &right)
        throw ModuleMismatch(std::string(name) + " is not a bimodule over the expected component rings");
}

} // namespace

std::shared_ptr<const TriRing3> TriRing3::build(TriRingConfig config, Limits limits) {
    if (!config.r1 || !config.r2 || !config.r3 || !config.m12 || !config.m13 || !config.m23)
        throw InputError("triangular ring config is missing a component");
    for (const auto* r : {config.r1.get(), config.r2.get(), config.r3.get()})
        if (r->size() > limits.ring_cap)
            throw SizeLimitExceeded("component ring of size " + std::to_string(r->size()) + " exceeds cap " +
                                    std::to_string(limits.ring_cap));
    check_attached(*config.m12, *config.r1, *config.r2, "M12");
    check_attached(*config.m13, *config.r1, *config.r3, "M13");
    check_attached(*config.m23, *config.r2, *config.r3, "M23");

    std::shared_ptr<TriRing3> t(new TriRing3());
    t->pairing_ = Pairing::build(config.m12, config.m23, config.m13, config.pairing);
    t->limits_ = limits;
    t->radix_ = {config.r1->size(), config.m12->size(), config.m13->size(),
                 config.r2->size(), config.m23->size(), config.r3->size()};
    std::size_t n = 1;
    for (std::size_t i = 0; i < 6; ++i) {
        t->stride_[i] = n;
        n *= t->radix_[i];
        if (n > limits.tri_cap)
            throw SizeLimitExceeded("triangular ring exceeds the size cap " + std::to_string(limits.tri_cap));
    }
    t->n_ = n;
    t->cfg_ = std::move(config);
    const auto& c = t->cfg_;

    const std::pair<const char*, const Bimodule*> mods[] = {
        {"M12", c.m12.get()}, {"M13", c.m13.get()}, {"M23", c.m23.get()}};
    for (const auto& [name, m] : mods) {
        for (Side side : {Side::Left, Side::Right}) {
            auto v = m->check_faithful(side);
            t->faithful_.push_back({name, side, v.faithful, v.witness});
            if (!v.faithful && !limits.allow_unfaithful)
                throw FaithfulnessViolation(std::string(name) + " is not faithful as a " + to_string(side) +
                                            " module; annihilating ring element index " +
                                            std::to_string(*v.witness));
        }
    }

    t->zero_ = t->encode({c.r1->zero(), c.m12->zero(), c.m13->zero(), c.r2->zero(), c.m23->zero(), c.r3->zero()});
    t->one_ = t->encode({c.r1->one(), c.m12->zero(), c.m13->zero(), c.r2->one(), c.m23->zero(), c.r3->one()});

    if (n <= limits.scan_cap && n <= 65536) {
        const auto N = static_cast<std::ptrdiff_t>(n);
        t->add_.resize(n * n);
        t->mul_.resize(n * n);
        t->br_.resize(n * n);
        t->neg_.resize(n);
        const TriRing3& tr = *t;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t x = 0; x < N; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const auto X = static_cast<Index>(x), Y = static_cast<Index>(y);
                t->add_[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(tr.add_blockwise(X, Y));
                t->mul_[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(tr.mul_blockwise(X, Y));
            }
            t->neg_[static_cast<std::size_t>(x)] = tr.neg_blockwise(static_cast<Index>(x));
        }
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t ux = static_cast<std::size_t>(x);
                const Index xy = t->mul_[ux * n + y], yx = t->mul_[y * n + ux];
                t->br_[ux * n + y] = t->add_[xy * n + t->neg_[yx]];
            }
    }

    const char* where = "triangular ring";
    for (Index x = 0; x < n && x < 65536; ++x) {
        if (t->mul(t->one_, x) != x || t->mul(x, t->one_) != x) throw AxiomViolation("unit law", {x}, where);
        if (t->mul(t->zero_, x) != t->zero_ || t->mul(x, t->zero_) != t->zero_)
            throw AxiomViolation("zero annihilates", {x}, where);
    }
    auto check_triple = [&](Index a, Index b, Index d) {
        if (t->mul(t->mul(a, b), d) != t->mul(a, t->mul(b, d)))
            throw AxiomViolation("(ab)c = a(bc)", {a, b, d}, where);
        if (t->mul(a, t->add(b, d)) != t->add(t->mul(a, b), t->mul(a, d)))
            throw AxiomViolation("a(b+c) = ab + ac", {a, b, d}, where);
        if (t->mul(t->add(b, d), a) != t->add(t->mul(b, a), t->mul(d, a)))
            throw AxiomViolation("(b+c)a = ba + ca", {a, b, d}, where);
    };
    if (n <= 256) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index d = 0; d < n; ++d) check_triple(a, b, d);
        t->triples_checked_ = static_cast<std::uint64_t>(n) * n * n;
        t->triples_exhaustive_ = true;
    } else {
        SplitMix64 rng(0x5452493352494e47ULL);
        constexpr std::uint64_t samples = 1 << 16;
        for (std::uint64_t s = 0; s < samples; ++s) {
            const auto a = static_cast<Index>(rng.below(n));
            const auto b = static_cast<Index>(rng.below(n));
            const auto d = static_cast<Index>(rng.below(n));
            check_triple(a, b, d);
        }
        t->triples_checked_ = samples;
        t->triples_exhaustive_ = false;
    }

    Fnv1a h;
    h.bytes("tri3.T3");
    c.r1->hash_into(h);
    c.r2->hash_into(h);
    c.r3->hash_into(h);
    c.m12->hash_into(h);
    c.m13->hash_into(h);
    c.m23->hash_into(h);
    h.bytes("pairing");
    h.u32s(t->pairing_.table());
    t->hash_ = h.value();
    return t;
}

Index TriRing3::encode(const TriComponents& c) const noexcept {
    return static_cast<Index>(c.r11 * stride_[0] + c.m12 * stride_[1] + c.m13 * stride_[2] + c.r22 * stride_[3] +
                              c.m23 * stride_[4] + c.r33 * stride_[5]);
}

TriComponents TriRing3::decode(Index x) const noexcept {
    std::size_t v = x;
    TriComponents c;
    c.r11 = static_cast<Index>(v % radix_[0]);
    v /= radix_[0];
    c.m12 = static_cast<Index>(v % radix_[1]);
    v /= radix_[1];
    c.m13 = static_cast<Index>(v % radix_[2]);
    v /= radix_[2];
    c.r22 = static_cast<Index>(v % radix_[3]);
    v /= radix_[3];
    c.m23 = static_cast<Index>(v % radix_[4]);
    v /= radix_[4];
    c.r33 = static_cast<Index>(v);
    return c;
}

Index TriRing3::add(Index x, Index y) const noexcept {
    return add_.empty() ? add_blockwise(x, y) : add_[static_cast<std::size_t>(x) * n_ + y];
}

Index TriRing3::mul(Index x, Index y) const noexcept {
    return mul_.empty() ? mul_blockwise(x, y) : mul_[static_cast<std::size_t>(x) * n_ + y];
}

Index TriRing3::bracket(Index x, Index y) const noexcept {
    if (!br_.empty()) return br_[static_cast<std::size_t>(x) * n_ + y];
    return sub(mul(x, y), mul(y, x));
}

Index TriRing3::add_blockwise(Index x, Index y) const noexcept {
    const auto a = decode(x), b = decode(y);
    const auto& c = cfg_;
    return encode({c.r1->add(a.r11, b.r11), c.m12->add(a.m12, b.m12), c.m13->add(a.m13, b.m13),
                   c.r2->add(a.r22, b.r22), c.m23->add(a.m23, b.m23), c.r3->add(a.r33, b.r33)});
}

Index TriRing3::mul_blockwise(Index x, Index y) const noexcept {
    const auto a = decode(x), b = decode(y);
    const auto& R1 = *cfg_.r1;
    const auto& R2 = *cfg_.r2;
    const auto& R3 = *cfg_.r3;
    const auto& M12 = *cfg_.m12;
    const auto& M13 = *cfg_.m13;
    const auto& M23 = *cfg_.m23;
    TriComponents r;
    r.r11 = R1.mul(a.r11, b.r11);
    r.m12 = M12.add(M12.act_left(a.r11, b.m12), M12.act_right(a.m12, b.r22));
    r.m13 = M13.add(M13.add(M13.act_left(a.r11, b.m13), pairing_.apply(a.m12, b.m23)),
                    M13.act_right(a.m13, b.r33));
    r.r22 = R2.mul(a.r22, b.r22);
    r.m23 = M23.add(M23.act_left(a.r22, b.m23), M23.act_right(a.m23, b.r33));
    r.r33 = R3.mul(a.r33, b.r33);
    return encode(r);
}

Index TriRing3::neg_blockwise(Index x) const noexcept {
    const auto a = decode(x);
    const auto& c = cfg_;
    return encode({c.r1->neg(a.r11), c.m12->neg(a.m12), c.m13->neg(a.m13), c.r2->neg(a.r22), c.m23->neg(a.m23),
                   c.r3->neg(a.r33)});
}

Index TriRing3::q(int i) const {
    return project(one_, corner_mask(i, i));
}

Index TriRing3::q_prime(int i) const {
    return sub(one_, q(i));
}

Index TriRing3::project(Index x, BlockMask mask) const noexcept {
    auto c = decode(x);
    if (!(mask & block::R11)) c.r11 = cfg_.r1->zero();
    if (!(mask & block::M12)) c.m12 = cfg_.m12->zero();
    if (!(mask & block::M13)) c.m13 = cfg_.m13->zero();
    if (!(mask & block::R22)) c.r22 = cfg_.r2->zero();
    if (!(mask & block::M23)) c.m23 = cfg_.m23->zero();
    if (!(mask & block::R33)) c.r33 = cfg_.r3->zero();
    return encode(c);
}

Index TriRing3::corner(Index x, int i, int j) const {
    return sandwich(q(i), x, q(j));
}

std::vector<Index> TriRing3::elements_of(BlockMask mask) const {
    std::vector<Index> out;
    for (Index x = 0; x < n_; ++x)
        if (in_blocks(x, mask)) out.push_back(x);
    return out;
}

bool TriRing3::all_faithful() const noexcept {
    for (const auto& f : faithful_)
        if (!f.faithful) return false;
    return true;
}

TriElement TriRing3::element(Index x) const {
    if (x >= n_) throw InputError("element index " + std::to_string(x) + " out of range");
    const auto c = decode(x);
    return {{cfg_.r1.get(), c.r11}, {cfg_.m12.get(), c.m12}, {cfg_.m13.get(), c.m13},
            {cfg_.r2.get(), c.r22}, {cfg_.m23.get(), c.m23}, {cfg_.r3.get(), c.r33}};
}

Index TriRing3::index_of(const TriElement& e) const {
    if (e.r11.ring != cfg_.r1.get() || e.r22.ring != cfg_.r2.get() || e.r33.ring != cfg_.r3.get())
        throw RingMismatch("element does not belong to this triangular ring");
    if (e.m12.module != cfg_.m12.get() || e.m13.module != cfg_.m13.get() || e.m23.module != cfg_.m23.get())
        throw ModuleMismatch("element does not belong to this triangular ring");
    return encode({e.r11.index, e.m12.index, e.m13.index, e.r22.index, e.m23.index, e.r33.index});
}

TriElement TriRing3::t_mul(const TriElement& x, const TriElement& y) const {
    index_of(x);
    index_of(y);
    TriElement r;
    r.r11 = x.r11 * y.r11;
    r.m12 = x.r11 * y.m12 + x.m12 * y.r22;
    r.m13 = x.r11 * y.m13 + pairing_(x.m12, y.m23) + x.m13 * y.r33;
    r.r22 = x.r22 * y.r22;
    r.m23 = x.r22 * y.m23 + x.m23 * y.r33;
    r.r33 = x.r33 * y.r33;
    return r;
}

TriElement TriRing3::t_add(const TriElement& x, const TriElement& y) const {
    index_of(x);
    index_of(y);
    return {x.r11 + y.r11, x.m12 + y.m12, x.m13 + y.m13, x.r22 + y.r22, x.m23 + y.m23, x.r33 + y.r33};
}

TriElement TriRing3::t_neg(const TriElement& x) const {
    index_of(x);
    return {-x.r11, -x.m12, -x.m13, -x.r22, -x.m23, -x.r33};
}

std::string TriRing3::describe(Index x) const {
    const auto c = decode(x);
    return "(r11=" + cfg_.r1->describe(c.r11) + " m12=" + std::to_string(c.m12) + " m13=" + std::to_string(c.m13) +
           " r22=" + cfg_.r2->describe(c.r22) + " m23=" + std::to_string(c.m23) +
           " r33=" + cfg_.r3->describe(c.r33) + ")";
}

void TriRing3::require_scannable(const char* what) const {
    if (!dense())
        throw SizeLimitExceeded(std::string(what) + " needs an exhaustive pair scan; |T| = " + std::to_string(n_) +
                                " exceeds the scan cap " + std::to_string(limits_.scan_cap));
}

} // namespace tri3
