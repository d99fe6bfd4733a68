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

#include <tri3/finite_ring.hpp>

#include <atomic>
#include <sstream>

#include <tri3/error.hpp>

namespace tri3 {

std::uint64_t next_structure_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

namespace {

std::size_t checked_power(std::uint64_t base, std::uint64_t exp, std::size_t cap, const char* what) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap)
            throw SizeLimitExceeded(std::string(what) + ": size exceeds cap " + std::to_string(cap));
    }
    return static_cast<std::size_t>(v);
}

// Verifies the ring axioms on dense tables and returns the negation table.
// Axioms are checked in a fixed order; the reported witness is the
// lexicographically smallest violating tuple of the first failing axiom.
std::vector<Index> verify_ring_tables(std::size_t n, const std::vector<Index>& add,
                                      const std::vector<Index>& mul, Index zero, Index one) {
    const char* where = "ring";
    auto A = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) >= n || M(a, b) >= n) throw AxiomViolation("closure", {a, b}, where);
    if (zero >= n || one >= n) throw AxiomViolation("unit indices in range", {zero, one}, where);

    for (std::size_t a = 0; a < n; ++a)
        if (A(zero, a) != a || A(a, zero) != a) throw AxiomViolation("additive identity", {a}, where);
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
            if (A(a, b) == zero) {
                neg[a] = static_cast<Index>(b);
                break;
            }
        if (neg[a] == n) throw AxiomViolation("additive inverse", {a}, where);
    }

    for (std::size_t a = 0; a < n; ++a)
        if (M(one, a) != a || M(a, one) != a) throw AxiomViolation("multiplicative identity", {a}, where);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw AxiomViolation("multiplicative associativity", {a, b, c}, where);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw AxiomViolation("left distributivity", {a, b, c}, where);
                if (M(A(b, c), a) != A(M(b, a), M(c, a)))
                    throw AxiomViolation("right distributivity", {a, b, c}, where);
            }
    return neg;
}

struct MatrixLayout {
    std::uint32_t modulus = 0;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> free_positions; // row-major positions r*d+c
    bool scalar = false;
};

std::size_t parameter_count(const MatrixLayout& l) { return l.scalar ? 1 : l.free_positions.size(); }

std::vector<std::uint32_t> layout_matrix(const MatrixLayout& l, Index i) {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(l.dim) * l.dim, 0);
    if (l.scalar) {
        for (std::uint32_t k = 0; k < l.dim; ++k) m[k * l.dim + k] = i;
        return m;
    }
    for (auto pos : l.free_positions) {
        m[pos] = i % l.modulus;
        i /= l.modulus;
    }
    return m;
}

// Returns size() of the layout's ring when the matrix is out of shape.
std::size_t layout_index(const MatrixLayout& l, const std::vector<std::uint32_t>& m, std::size_t size) {
    const std::uint32_t d = l.dim;
    if (m.size() != static_cast<std::size_t>(d) * d) return size;
    for (auto v : m)
        if (v >= l.modulus) return size;
    if (l.scalar) {
        for (std::uint32_t r = 0; r < d; ++r)
            for (std::uint32_t c = 0; c < d; ++c) {
                const auto v = m[r * d + c];
                if (r == c ? v != m[0] : v != 0) return size;
            }
        return m[0];
    }
    std::vector<bool> is_free(m.size(), false);
    for (auto pos : l.free_positions) is_free[pos] = true;
    for (std::size_t p = 0; p < m.size(); ++p)
        if (!is_free[p] && m[p] != 0) return size;
    std::size_t idx = 0, radix = 1;
    for (auto pos : l.free_positions) {
        idx += m[pos] * radix;
        radix *= l.modulus;
    }
    return idx;
}

void validate_matrix_params(std::uint32_t modulus, std::uint32_t dim) {
    if (modulus < 2) throw InputError("ring modulus must be >= 2, got " + std::to_string(modulus));
    if (dim < 1) throw InputError("ring dimension must be >= 1, got " + std::to_string(dim));
}

} // namespace

std::shared_ptr<const FiniteRing> FiniteRing::build(const RingSpec& spec, std::size_t size_cap) {
    std::shared_ptr<FiniteRing> r(new FiniteRing());
    r->spec_ = spec;
    r->id_ = next_structure_id();

    if (const auto* ex = std::get_if<ringspec::ExplicitTables>(&spec)) {
        const std::size_t n = ex->add.size();
        if (n == 0) throw InputError("explicit ring tables are empty");
        if (n > size_cap)
            throw SizeLimitExceeded("explicit ring of size " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(size_cap));
        if (ex->mul.size() != n) throw InputError("explicit ring: add and mul tables differ in size");
        r->n_ = n;
        r->add_.reserve(n * n);
        r->mul_.reserve(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            if (ex->add[a].size() != n || ex->mul[a].size() != n)
                throw InputError("explicit ring: table row " + std::to_string(a) + " has wrong length");
            r->add_.insert(r->add_.end(), ex->add[a].begin(), ex->add[a].end());
            r->mul_.insert(r->mul_.end(), ex->mul[a].begin(), ex->mul[a].end());
        }
        r->zero_ = ex->zero;
        r->one_ = ex->one;
        r->neg_ = verify_ring_tables(n, r->add_, r->mul_, r->zero_, r->one_);
        return r;
    }

    MatrixLayout layout;
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ringspec::Zn>) {
                validate_matrix_params(s.modulus, 1);
                layout.modulus = s.modulus;
                layout.dim = 1;
                layout.free_positions = {0};
            } else if constexpr (std::is_same_v<S, ringspec::MatrixRing>) {
                validate_matrix_params(s.modulus, s.dimension);
                layout.modulus = s.modulus;
                layout.dim = s.dimension;
                for (std::uint32_t p = 0; p < s.dimension * s.dimension; ++p) layout.free_positions.push_back(p);
            } else if constexpr (std::is_same_v<S, ringspec::UpperTriangularRing>) {
                validate_matrix_params(s.modulus, s.dimension);
                layout.modulus = s.modulus;
                layout.dim = s.dimension;
                for (std::uint32_t row = 0; row < s.dimension; ++row)
                    for (std::uint32_t col = row; col < s.dimension; ++col)
                        layout.free_positions.push_back(row * s.dimension + col);
            } else if constexpr (std::is_same_v<S, ringspec::DiagonalScalarRing>) {
                validate_matrix_params(s.modulus, s.dimension);
                layout.modulus = s.modulus;
                layout.dim = s.dimension;
                layout.scalar = true;
            }
        },
        spec);

    const std::size_t n = checked_power(layout.modulus, parameter_count(layout), size_cap, "matrix ring");
    const std::uint32_t d = layout.dim, q = layout.modulus;
    r->n_ = n;
    r->dim_ = d;
    r->modulus_ = q;
    r->free_positions_ = layout.free_positions;
    r->scalar_ = layout.scalar;

    std::vector<std::vector<std::uint32_t>> mats(n);
    for (std::size_t i = 0; i < n; ++i) mats[i] = layout_matrix(layout, static_cast<Index>(i));

    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    std::vector<std::uint32_t> tmp(static_cast<std::size_t>(d) * d);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t p = 0; p < tmp.size(); ++p) tmp[p] = (mats[a][p] + mats[b][p]) % q;
            const auto s = layout_index(layout, tmp, n);
            for (std::uint32_t row = 0; row < d; ++row)
                for (std::uint32_t col = 0; col < d; ++col) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t k = 0; k < d; ++k)
                        acc += static_cast<std::uint64_t>(mats[a][row * d + k]) * mats[b][k * d + col];
                    tmp[row * d + col] = static_cast<std::uint32_t>(acc % q);
                }
            const auto p = layout_index(layout, tmp, n);
            if (s == n || p == n) throw AxiomViolation("closure", {a, b}, "matrix ring");
            r->add_[a * n + b] = static_cast<Index>(s);
            r->mul_[a * n + b] = static_cast<Index>(p);
        }
    }

    std::vector<std::uint32_t> ident(static_cast<std::size_t>(d) * d, 0);
    for (std::uint32_t k = 0; k < d; ++k) ident[k * d + k] = 1;
    r->zero_ = 0;
    r->one_ = static_cast<Index>(layout_index(layout, ident, n));
    r->neg_ = verify_ring_tables(n, r->add_, r->mul_, r->zero_, r->one_);
    return r;
}

RingElement FiniteRing::element(Index i) const {
    if (i >= n_) throw InputError("ring element index " + std::to_string(i) + " out of range");
    return {this, i};
}

std::vector<Index> FiniteRing::center() const {
    std::vector<Index> out;
    for (std::size_t z = 0; z < n_; ++z) {
        bool central = true;
        for (std::size_t x = 0; x < n_ && central; ++x)
            central = mul_[z * n_ + x] == mul_[x * n_ + z];
        if (central) out.push_back(static_cast<Index>(z));
    }
    return out;
}

std::vector<std::uint32_t> FiniteRing::matrix(Index i) const {
    if (dim_ == 0) throw InputError("explicit-table ring has no matrix form");
    if (i >= n_) throw InputError("ring element index out of range");
    MatrixLayout l{modulus_, dim_, free_positions_, scalar_};
    return layout_matrix(l, i);
}

Index FiniteRing::from_matrix(const std::vector<std::uint32_t>& entries) const {
    if (dim_ == 0) throw InputError("explicit-table ring has no matrix form");
    MatrixLayout l{modulus_, dim_, free_positions_, scalar_};
    const auto idx = layout_index(l, entries, n_);
    if (idx == n_) throw InputError("matrix is not an element of this ring");
    return static_cast<Index>(idx);
}

ringspec::ExplicitTables FiniteRing::to_explicit() const {
    ringspec::ExplicitTables t;
    t.add.assign(n_, std::vector<Index>(n_));
    t.mul.assign(n_, std::vector<Index>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            t.add[a][b] = add_[a * n_ + b];
            t.mul[a][b] = mul_[a * n_ + b];
        }
    t.zero = zero_;
    t.one = one_;
    return t;
}

void FiniteRing::hash_into(Fnv1a& h) const {
    h.bytes("ring");
    h.u64(n_);
    h.u32(zero_);
    h.u32(one_);
    h.u32s(add_);
    h.u32s(mul_);
}

std::string FiniteRing::describe(Index i) const {
    if (dim_ == 0 || dim_ == 1) return std::to_string(i);
    const auto m = matrix(i);
    std::ostringstream os;
    os << '[';
    for (std::uint32_t r = 0; r < dim_; ++r) {
        if (r) os << ';';
        for (std::uint32_t c = 0; c < dim_; ++c) os << (c ? "," : "") << m[r * dim_ + c];
    }
    os << ']';
    return os.str();
}

namespace {
const FiniteRing& same_ring(RingElement a, RingElement b) {
    if (a.ring == nullptr || a.ring != b.ring) throw RingMismatch("ring elements belong to different rings");
    return *a.ring;
}
} // namespace

RingElement operator+(RingElement a, RingElement b) {
    const auto& r = same_ring(a, b);
    return {&r, r.add(a.index, b.index)};
}

RingElement operator-(RingElement a, RingElement b) {
    const auto& r = same_ring(a, b);
    return {&r, r.sub(a.index, b.index)};
}

RingElement operator*(RingElement a, RingElement b) {
    const auto& r = same_ring(a, b);
    return {&r, r.mul(a.index, b.index)};
}

RingElement operator-(RingElement a) {
    if (a.ring == nullptr) throw RingMismatch("untagged ring element");
    return {a.ring, a.ring->neg(a.index)};
}

} // namespace tri3
