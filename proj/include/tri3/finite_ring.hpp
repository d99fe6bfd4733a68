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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <tri3/digest.hpp>

namespace tri3 {

/// Position of an element in a structure's canonical enumeration.
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultRingSizeCap = 4096;

namespace ringspec {

struct Zn {
    std::uint32_t modulus = 2;
};

/// Full d x d matrices over Z/n.
struct MatrixRing {
    std::uint32_t modulus = 2;
    std::uint32_t dimension = 2;
};

/// Upper triangular d x d matrices over Z/n.
struct UpperTriangularRing {
    std::uint32_t modulus = 2;
    std::uint32_t dimension = 2;
};

/// Scalar matrices a*I_d over Z/n (isomorphic to Z/n, but carries its matrix
/// shape so block embeddings can be formed).
struct DiagonalScalarRing {
    std::uint32_t modulus = 2;
    std::uint32_t dimension = 2;
};

/// Arbitrary tables; add[a][b] and mul[a][b] are indices.
struct ExplicitTables {
    std::vector<std::vector<Index>> add;
    std::vector<std::vector<Index>> mul;
    Index zero = 0;
    Index one = 1;
};

} // namespace ringspec

using RingSpec = std::variant<ringspec::Zn, ringspec::MatrixRing, ringspec::UpperTriangularRing,
                              ringspec::DiagonalScalarRing, ringspec::ExplicitTables>;

class FiniteRing;

/// An element tagged with the ring it belongs to. Arithmetic across rings
/// throws RingMismatch.
struct RingElement {
    const FiniteRing* ring = nullptr;
    Index index = 0;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(RingElement a, RingElement b);
RingElement operator-(RingElement a, RingElement b);
RingElement operator*(RingElement a, RingElement b);
RingElement operator-(RingElement a);

/// A finite unital ring held as dense operation tables.
///
/// Enumeration is canonical. Z/n lists 0..n-1. Matrix-style rings list their
/// free entries in row-major order as a little-endian mixed-radix number:
/// the first free entry is the least significant digit.
class FiniteRing {
public:
    /// Builds the tables and verifies every ring axiom exhaustively.
    /// Throws AxiomViolation, SizeLimitExceeded, or InputError (bad spec).
    static std::shared_ptr<const FiniteRing> build(const RingSpec& spec,
                                                   std::size_t size_cap = kDefaultRingSizeCap);

    std::size_t size() const noexcept { return n_; }
    Index zero() const noexcept { return zero_; }
    Index one() const noexcept { return one_; }

    Index add(Index a, Index b) const noexcept { return add_[a * n_ + b]; }
    Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
    Index neg(Index a) const noexcept { return neg_[a]; }
    Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

    /// Throws InputError when `i` is out of range.
    RingElement element(Index i) const;
    RingElement zero_element() const noexcept { return {this, zero_}; }
    RingElement one_element() const noexcept { return {this, one_}; }

    /// Brute force over all pairs, ascending.
    std::vector<Index> center() const;

    const RingSpec& spec() const noexcept { return spec_; }

    /// Ring identity used by RingElement tags and report labels.
    std::uint64_t id() const noexcept { return id_; }

    /// For matrix-style rings (including Z/n as 1x1): the ring's matrix
    /// dimension and modulus. Zero for explicit tables.
    std::uint32_t matrix_dimension() const noexcept { return dim_; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    /// Row-major d x d entries of element `i`. Throws InputError for explicit
    /// tables.
    std::vector<std::uint32_t> matrix(Index i) const;

    /// Inverse of `matrix`; throws InputError when the matrix is not in the
    /// ring's shape.
    Index from_matrix(const std::vector<std::uint32_t>& entries) const;

    /// Equivalent ExplicitTables spec (same enumeration, same tables).
    ringspec::ExplicitTables to_explicit() const;

    /// Feeds size, unit indices and both tables into `h`.
    void hash_into(Fnv1a& h) const;

    std::string describe(Index i) const;

private:
    FiniteRing() = default;

    RingSpec spec_;
    std::size_t n_ = 0;
    std::vector<Index> add_, mul_, neg_;
    Index zero_ = 0, one_ = 0;
    std::uint64_t id_ = 0;
    std::uint32_t dim_ = 0, modulus_ = 0;
    // Matrix-style layout: free entry positions (row-major) and whether all
    // diagonal entries are tied to a single parameter.
    std::vector<std::uint32_t> free_positions_;
    bool scalar_ = false;
};

/// Unique id for a freshly built structure.
std::uint64_t next_structure_id();

} // namespace tri3
