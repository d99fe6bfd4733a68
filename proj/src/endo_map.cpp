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

#include <tri3/endo_map.hpp>

#include <fstream>
#include <sstream>

#include <tri3/error.hpp>
#include <tri3/kernels.hpp>

namespace tri3 {

EndoMap EndoMap::zero(const TriRing3& t) {
    return {t.hash(), std::vector<Index>(t.size(), t.zero())};
}

EndoMap EndoMap::identity(const TriRing3& t) {
    return from_function(t, [](Index x) { return x; });
}

std::uint64_t EndoMap::digest() const {
    Fnv1a h;
    h.bytes("map");
    h.u64(ring_hash_);
    h.u64(table_.size());
    h.u32s(table_);
    return h.value();
}

void require_same_ring(const TriRing3& t, const EndoMap& f) {
    if (f.ring_hash() != t.hash())
        throw HashMismatch("map is bound to ring " + to_hex(f.ring_hash()) + ", not " + t.hash_hex());
    if (f.size() != t.size())
        throw InputError("map has " + std::to_string(f.size()) + " entries, ring has " + std::to_string(t.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.table()[i] >= t.size())
            throw InputError("map entry " + std::to_string(i) + " is out of range");
}

namespace {

MapVerdict from_scan(std::string property, const kernels::PairScan& s) {
    MapVerdict v;
    v.property = std::move(property);
    v.checked = s.checked;
    v.violations = s.violations;
    v.holds = s.violations == 0;
    for (const auto& w : s.witnesses) v.witnesses.push_back({w[0], w[1]});
    return v;
}

} // namespace

MapVerdict is_mult_lie_derivation(const TriRing3& t, const EndoMap& phi, Exec e) {
    require_same_ring(t, phi);
    const auto v = kernels::view_of(t);
    return from_scan("multiplicative Lie derivation",
                     kernels::mld(v, phi.table().data(), t.limits().witness_cap, e));
}

MapVerdict is_additive(const TriRing3& t, const EndoMap& phi, Exec e) {
    require_same_ring(t, phi);
    const auto v = kernels::view_of(t);
    return from_scan("additive", kernels::additive(v, phi.table().data(), t.limits().witness_cap, e));
}

MapVerdict is_leibniz(const TriRing3& t, const EndoMap& phi, Exec e) {
    require_same_ring(t, phi);
    const auto v = kernels::view_of(t);
    return from_scan("Leibniz rule", kernels::leibniz(v, phi.table().data(), t.limits().witness_cap, e));
}

MapVerdict is_derivation(const TriRing3& t, const EndoMap& phi, Exec e) {
    auto add = is_additive(t, phi, e);
    auto leib = is_leibniz(t, phi, e);
    MapVerdict v;
    v.property = "derivation";
    v.checked = add.checked + leib.checked;
    v.violations = add.violations + leib.violations;
    v.holds = add.holds && leib.holds;
    v.witnesses = add.holds ? leib.witnesses : add.witnesses;
    return v;
}

MapVerdict is_central_vanishing_on_commutators(const TriRing3& t, const EndoMap& gamma, const ElementSet& center,
                                               const ElementSet& commutators) {
    require_same_ring(t, gamma);
    MapVerdict v;
    v.property = "central-valued and zero on commutators";
    const auto cap = t.limits().witness_cap;
    for (Index x = 0; x < t.size(); ++x) {
        ++v.checked;
        if (!center.contains(gamma(x)) || (commutators.contains(x) && gamma(x) != t.zero())) v.fail({x}, cap);
    }
    return v;
}

MapVerdict maps_equal(const TriRing3& t, const EndoMap& f, const EndoMap& g, std::string property) {
    require_same_ring(t, f);
    require_same_ring(t, g);
    MapVerdict v;
    v.property = std::move(property);
    for (Index x = 0; x < t.size(); ++x) {
        ++v.checked;
        if (f(x) != g(x)) v.fail({x}, t.limits().witness_cap);
    }
    return v;
}

MapVerdict range_within(const TriRing3& t, const EndoMap& f, const std::vector<Index>& domain, BlockMask mask,
                        std::string property) {
    MapVerdict v;
    v.property = std::move(property);
    for (auto x : domain) {
        ++v.checked;
        if (!t.in_blocks(f(x), mask)) v.fail({x}, t.limits().witness_cap);
    }
    return v;
}

EndoMap inner_derivation(const TriRing3& t, Index a) {
    if (a >= t.size()) throw InputError("inner derivation element out of range");
    return EndoMap::from_function(t, [&](Index x) { return t.bracket(a, x); });
}

EndoMap map_add(const TriRing3& t, const EndoMap& f, const EndoMap& g) {
    require_same_ring(t, f);
    require_same_ring(t, g);
    return EndoMap::from_function(t, [&](Index x) { return t.add(f(x), g(x)); });
}

EndoMap map_sub(const TriRing3& t, const EndoMap& f, const EndoMap& g) {
    require_same_ring(t, f);
    require_same_ring(t, g);
    return EndoMap::from_function(t, [&](Index x) { return t.sub(f(x), g(x)); });
}

nlohmann::ordered_json map_to_json(const EndoMap& f) {
    nlohmann::ordered_json j;
    j["ring_hash"] = to_hex(f.ring_hash());
    j["size"] = f.size();
    j["entries"] = f.table();
    return j;
}

std::string map_to_text(const EndoMap& f) {
    return map_to_json(f).dump() + "\n";
}

namespace {

bool non_negative(const nlohmann::json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

} // namespace

EndoMap map_from_json(const nlohmann::json& j, const TriRing3& t) {
    if (!j.is_object() || !j.contains("ring_hash") || !j.contains("size") || !j.contains("entries"))
        throw InputError("map document needs ring_hash, size and entries");
    if (!j["ring_hash"].is_string() || !non_negative(j["size"]) || !j["entries"].is_array())
        throw InputError("map document fields have the wrong types");
    const auto hash = from_hex(j["ring_hash"].get<std::string>());
    if (hash != t.hash())
        throw HashMismatch("map file is bound to ring " + to_hex(hash) + ", not " + t.hash_hex());
    const auto size = j["size"].get<std::size_t>();
    if (size != t.size() || j["entries"].size() != size)
        throw InputError("map length does not match the ring size " + std::to_string(t.size()));
    std::vector<Index> table;
    table.reserve(size);
    for (const auto& e : j["entries"]) {
        if (!non_negative(e) || e.get<std::uint64_t>() >= t.size())
            throw InputError("map entry out of range");
        table.push_back(e.get<Index>());
    }
    return {hash, std::move(table)};
}

void write_map_file(const std::filesystem::path& path, const EndoMap& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << map_to_text(f);
    if (!out) throw InputError("failed writing " + path.string());
}

EndoMap read_map_file(const std::filesystem::path& path, const TriRing3& t) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return map_from_json(j, t);
}

} // namespace tri3
