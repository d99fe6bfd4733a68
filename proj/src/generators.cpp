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

#include <tri3/generators.hpp>

#include <tri3/error.hpp>

namespace tri3 {

std::size_t MatrixCarrier::size() const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < free.size(); ++i) s *= modulus;
    return s;
}

std::vector<std::uint32_t> MatrixCarrier::matrix(Index i) const {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(rows) * cols, 0);
    for (const auto& [r, c] : free) {
        m[r * cols + c] = i % modulus;
        i /= modulus;
    }
    return m;
}

std::optional<Index> MatrixCarrier::index(const std::vector<std::uint32_t>& m) const {
    std::vector<std::uint8_t> is_free(m.size(), 0);
    for (const auto& [r, c] : free) is_free[r * cols + c] = 1;
    for (std::size_t p = 0; p < m.size(); ++p)
        if (!is_free[p] && m[p] != 0) return std::nullopt;
    Index idx = 0, w = 1;
    for (const auto& [r, c] : free) {
        idx += m[r * cols + c] * w;
        w *= modulus;
    }
    return idx;
}

namespace {

std::vector<std::uint32_t> matmul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  std::uint32_t n, std::uint32_t k, std::uint32_t m, std::uint32_t q) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * m, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint64_t acc = 0;
            for (std::uint32_t l = 0; l < k; ++l) acc += static_cast<std::uint64_t>(a[i * k + l]) * b[l * m + j];
            out[i * m + j] = static_cast<std::uint32_t>(acc % q);
        }
    return out;
}

Index carrier_index(const MatrixCarrier& c, const std::vector<std::uint32_t>& m, const char* what) {
    auto idx = c.index(m);
    if (!idx) throw InputError(std::string(what) + " leaves the carrier shape");
    return *idx;
}

MatrixCarrier scalar_carrier(std::uint32_t n) {
    return {n, 1, 1, {{0, 0}}};
}

MatrixCarrier column_pair_carrier(std::uint32_t n) {
    return {n, 2, 2, {{0, 1}, {1, 1}}};
}

MatrixCarrier corner_entry_carrier(std::uint32_t n) {
    return {n, 2, 2, {{0, 1}}};
}

void validate_modulus(std::uint32_t modulus) {
    if (modulus < 2) throw InputError("preset modulus must be at least 2, got " + std::to_string(modulus));
}

} // namespace

BimoduleSpec matrix_block_bimodule(std::shared_ptr<const FiniteRing> left, std::shared_ptr<const FiniteRing> right,
                                   const MatrixCarrier& carrier) {
    if (left->matrix_dimension() != carrier.rows || right->matrix_dimension() != carrier.cols)
        throw InputError("matrix block carrier shape does not match the rings' matrix dimensions");
    const std::uint32_t q = carrier.modulus;
    const std::size_t n = carrier.size(), nl = left->size(), nr = right->size();
    std::vector<std::vector<std::uint32_t>> mats(n);
    for (Index i = 0; i < n; ++i) mats[i] = carrier.matrix(i);

    BimoduleSpec s;
    s.size = n;
    s.zero = 0;
    s.add.resize(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            auto m = mats[a];
            for (std::size_t p = 0; p < m.size(); ++p) m[p] = (m[p] + mats[b][p]) % q;
            s.add[a * n + b] = carrier_index(carrier, m, "carrier sum");
        }
    s.left_action.resize(nl * n);
    for (Index r = 0; r < nl; ++r) {
        const auto rm = left->matrix(r);
        for (Index m = 0; m < n; ++m)
            s.left_action[r * n + m] =
                carrier_index(carrier, matmul(rm, mats[m], carrier.rows, carrier.rows, carrier.cols, q), "left action");
    }
    s.right_action.resize(n * nr);
    for (Index m = 0; m < n; ++m)
        for (Index r = 0; r < nr; ++r)
            s.right_action[m * nr + r] = carrier_index(
                carrier, matmul(mats[m], right->matrix(r), carrier.rows, carrier.cols, carrier.cols, q), "right action");
    s.left = std::move(left);
    s.right = std::move(right);
    return s;
}

std::vector<Index> matrix_block_pairing(const MatrixCarrier& c12, const MatrixCarrier& c23,
                                        const MatrixCarrier& c13) {
    if (c12.cols != c23.rows || c13.rows != c12.rows || c13.cols != c23.cols)
        throw InputError("pairing carriers have incompatible shapes");
    const std::size_t a = c12.size(), b = c23.size();
    std::vector<Index> table(a * b);
    for (Index m = 0; m < a; ++m) {
        const auto mm = c12.matrix(m);
        for (Index w = 0; w < b; ++w)
            table[m * b + w] =
                carrier_index(c13, matmul(mm, c23.matrix(w), c12.rows, c12.cols, c23.cols, c12.modulus), "pairing");
    }
    return table;
}

TriRingConfig preset_ut3_config(std::uint32_t modulus, std::size_t ring_cap) {
    validate_modulus(modulus);
    TriRingConfig c;
    c.r1 = FiniteRing::build(ringspec::Zn{modulus}, ring_cap);
    c.r2 = FiniteRing::build(ringspec::Zn{modulus}, ring_cap);
    c.r3 = FiniteRing::build(ringspec::Zn{modulus}, ring_cap);
    const auto carrier = scalar_carrier(modulus);
    c.m12 = Bimodule::build(matrix_block_bimodule(c.r1, c.r2, carrier), ring_cap);
    c.m13 = Bimodule::build(matrix_block_bimodule(c.r1, c.r3, carrier), ring_cap);
    c.m23 = Bimodule::build(matrix_block_bimodule(c.r2, c.r3, carrier), ring_cap);
    c.pairing = matrix_block_pairing(carrier, carrier, carrier);
    return c;
}

std::shared_ptr<const TriRing3> preset_ut3(std::uint32_t modulus, Limits limits) {
    return TriRing3::build(preset_ut3_config(modulus, limits.ring_cap), limits);
}

TriRingConfig preset_example21_config(std::uint32_t modulus, std::size_t ring_cap) {
    validate_modulus(modulus);
    TriRingConfig c;
    c.r1 = FiniteRing::build(ringspec::MatrixRing{modulus, 2}, ring_cap);
    c.r2 = FiniteRing::build(ringspec::DiagonalScalarRing{modulus, 2}, ring_cap);
    c.r3 = FiniteRing::build(ringspec::DiagonalScalarRing{modulus, 2}, ring_cap);
    const auto cols = column_pair_carrier(modulus);
    const auto entry = corner_entry_carrier(modulus);
    c.m12 = Bimodule::build(matrix_block_bimodule(c.r1, c.r2, cols), ring_cap);
    c.m13 = Bimodule::build(matrix_block_bimodule(c.r1, c.r3, cols), ring_cap);
    c.m23 = Bimodule::build(matrix_block_bimodule(c.r2, c.r3, entry), ring_cap);
    c.pairing = matrix_block_pairing(cols, entry, cols);
    return c;
}

std::shared_ptr<const TriRing3> preset_example21(std::uint32_t modulus, Limits limits) {
    return TriRing3::build(preset_example21_config(modulus, limits.ring_cap), limits);
}

std::vector<std::uint32_t> example21_embed(const TriRing3& t, Index x) {
    const std::uint32_t q = t.r1().modulus();
    if (t.r1().matrix_dimension() != 2 || t.r2().matrix_dimension() != 2 || t.r3().matrix_dimension() != 2 ||
        t.m12().size() != static_cast<std::size_t>(q) * q || t.m13().size() != t.m12().size() ||
        t.m23().size() != q)
        throw InputError("ring does not have the 6x6 block preset shape");
    const auto c = t.decode(x);
    const auto cols = column_pair_carrier(q);
    const auto entry = corner_entry_carrier(q);
    std::vector<std::uint32_t> m(36, 0);
    auto place = [&](const std::vector<std::uint32_t>& blk, std::uint32_t r0, std::uint32_t c0) {
        for (std::uint32_t i = 0; i < 2; ++i)
            for (std::uint32_t j = 0; j < 2; ++j) m[(r0 + i) * 6 + c0 + j] = blk[i * 2 + j];
    };
    place(t.r1().matrix(c.r11), 0, 0);
    place(cols.matrix(c.m12), 0, 2);
    place(cols.matrix(c.m13), 0, 4);
    place(t.r2().matrix(c.r22), 2, 2);
    place(entry.matrix(c.m23), 2, 4);
    place(t.r3().matrix(c.r33), 4, 4);
    return m;
}

EndoMap gen_mld(const TriRing3& t, const RingFacts& facts, const MldRecipe& recipe, Exec e) {
    SplitMix64 rng(recipe.seed);
    EndoMap d = EndoMap::zero(t);
    if (recipe.use_inner) {
        const Index a = recipe.inner ? *recipe.inner : static_cast<Index>(rng.below(t.size()));
        d = inner_derivation(t, a);
    }
    std::vector<Index> gamma(t.size(), t.zero());
    if (recipe.use_central) {
        const auto& z = facts.center.members;
        for (Index x = 0; x < t.size(); ++x)
            if (!facts.commutators.contains(x)) gamma[x] = z[rng.below(z.size())];
    }
    auto phi = map_add(t, d, EndoMap(t.hash(), std::move(gamma)));
    const auto v = is_mult_lie_derivation(t, phi, e);
    if (!v.holds) throw GenerationFailed("generated map is not a multiplicative Lie derivation");
    return phi;
}

const std::vector<std::string>& non_mld_variants() {
    static const std::vector<std::string> v = {"squaring", "constant_I", "identity"};
    return v;
}

EndoMap gen_non_mld(const TriRing3& t, const std::string& variant, Exec e) {
    if (!variant.empty()) {
        bool known = false;
        for (const auto& v : non_mld_variants()) known = known || v == variant;
        if (!known) throw InputError("unknown non-MLD variant '" + variant + "'");
    }
    for (const auto& v : non_mld_variants()) {
        if (!variant.empty() && v != variant) continue;
        EndoMap f;
        if (v == "squaring")
            f = EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); });
        else if (v == "constant_I")
            f = EndoMap::from_function(t, [&](Index) { return t.one(); });
        else
            f = EndoMap::identity(t);
        if (!is_mult_lie_derivation(t, f, e).holds) return f;
    }
    throw GenerationFailed("every requested non-MLD variant satisfies the MLD identity on this ring");
}

} // namespace tri3
