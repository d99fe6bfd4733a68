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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include <tri3/ring_facts.hpp>
#include <tri3/tri_ring.hpp>
#include <tri3/verdict.hpp>

namespace tri3 {

/// A total map T -> T as an index table, bound to one ring by its hash.
/// Nothing about additivity is assumed.
class EndoMap {
public:
    EndoMap() = default;
    EndoMap(std::uint64_t ring_hash, std::vector<Index> table)
        : ring_hash_(ring_hash), table_(std::move(table)) {}

    static EndoMap zero(const TriRing3& t);
    static EndoMap identity(const TriRing3& t);

    template <class F>
    static EndoMap from_function(const TriRing3& t, F f) {
        std::vector<Index> table(t.size());
        for (Index x = 0; x < t.size(); ++x) table[x] = f(x);
        return {t.hash(), std::move(table)};
    }

    std::uint64_t ring_hash() const noexcept { return ring_hash_; }
    std::size_t size() const noexcept { return table_.size(); }
    Index operator()(Index x) const noexcept { return table_[x]; }
    const std::vector<Index>& table() const noexcept { return table_; }
    void set(Index x, Index value) { table_.at(x) = value; }

    /// FNV-1a over ring hash, size and entries.
    std::uint64_t digest() const;

    friend bool operator==(const EndoMap&, const EndoMap&) = default;

private:
    std::uint64_t ring_hash_ = 0;
    std::vector<Index> table_;
};

/// HashMismatch when the map belongs to another ring; InputError on a wrong
/// length or an out-of-range entry.
void require_same_ring(const TriRing3& t, const EndoMap& f);

MapVerdict is_mult_lie_derivation(const TriRing3& t, const EndoMap& phi, Exec e = Exec::Parallel);
MapVerdict is_additive(const TriRing3& t, const EndoMap& phi, Exec e = Exec::Parallel);
/// phi(xy) = phi(x) y + x phi(y) only.
MapVerdict is_leibniz(const TriRing3& t, const EndoMap& phi, Exec e = Exec::Parallel);
/// Additive and Leibniz.
MapVerdict is_derivation(const TriRing3& t, const EndoMap& phi, Exec e = Exec::Parallel);
MapVerdict is_central_vanishing_on_commutators(const TriRing3& t, const EndoMap& gamma, const ElementSet& center,
                                               const ElementSet& commutators);
/// f(x) == g(x) for all x; witnesses are the differing inputs.
MapVerdict maps_equal(const TriRing3& t, const EndoMap& f, const EndoMap& g, std::string property);
/// f(x) inside the blocks of `mask` for every x in `domain`.
MapVerdict range_within(const TriRing3& t, const EndoMap& f, const std::vector<Index>& domain, BlockMask mask,
                        std::string property);

/// x -> [a, x].
EndoMap inner_derivation(const TriRing3& t, Index a);
EndoMap map_add(const TriRing3& t, const EndoMap& f, const EndoMap& g);
EndoMap map_sub(const TriRing3& t, const EndoMap& f, const EndoMap& g);

/// {"ring_hash": hex, "size": n, "entries": [...]}
nlohmann::ordered_json map_to_json(const EndoMap& f);
std::string map_to_text(const EndoMap& f);
/// Rejects a hash or length that does not match `t`.
EndoMap map_from_json(const nlohmann::json& j, const TriRing3& t);
void write_map_file(const std::filesystem::path& path, const EndoMap& f);
EndoMap read_map_file(const std::filesystem::path& path, const TriRing3& t);

} // namespace tri3
