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


#include <tri3/config.hpp>

#include <fstream>
#include <set>

#include <tri3/digest.hpp>
#include <tri3/error.hpp>
#include <tri3/generators.hpp>

namespace tri3 {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw InputError("config " + where + ": " + what);
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) bad(where, "must be an object");
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items())
        if (!ok.count(k)) bad(where, "unknown key '" + k + "'");
}

const json& need(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) bad(where, std::string("missing '") + key + "'");
    return j.at(key);
}

bool non_negative(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_uint(const json& j, const std::string& where, const char* key) {
    const auto& v = need(j, where, key);
    if (!non_negative(v)) bad(where, std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::uint32_t get_u32(const json& j, const std::string& where, const char* key) {
    const auto v = get_uint(j, where, key);
    if (v > 0xffffffffULL) bad(where, std::string("'") + key + "' is too large");
    return static_cast<std::uint32_t>(v);
}

/// rows x cols table of indices, each below `bound`.
std::vector<Index> get_table(const json& j, const std::string& where, const char* key, std::size_t rows,
                             std::size_t cols, std::size_t bound) {
    const auto& v = need(j, where, key);
    if (!v.is_array() || v.size() != rows)
        bad(where, std::string("'") + key + "' must have " + std::to_string(rows) + " rows");
    std::vector<Index> out;
    out.reserve(rows * cols);
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != cols)
            bad(where, std::string("'") + key + "' rows must have " + std::to_string(cols) + " entries");
        for (const auto& e : row) {
            if (!non_negative(e) || e.get<std::uint64_t>() >= bound)
                bad(where, std::string("'") + key + "' entry out of range");
            out.push_back(e.get<Index>());
        }
    }
    return out;
}

std::vector<std::vector<Index>> unflatten(const std::vector<Index>& flat, std::size_t cols) {
    std::vector<std::vector<Index>> out;
    for (std::size_t i = 0; i < flat.size(); i += cols) out.emplace_back(flat.begin() + i, flat.begin() + i + cols);
    return out;
}

RingSpec parse_ring_spec(const json& j, const std::string& where) {
    const auto& kind_v = need(j, where, "kind");
    if (!kind_v.is_string()) bad(where, "'kind' must be a string");
    const auto kind = kind_v.get<std::string>();
    if (kind == "Zn") {
        allow_keys(j, where, {"kind", "modulus"});
        return ringspec::Zn{get_u32(j, where, "modulus")};
    }
    if (kind == "MatrixRing" || kind == "UpperTriangularRing" || kind == "DiagonalScalarRing") {
        allow_keys(j, where, {"kind", "modulus", "dimension"});
        const auto q = get_u32(j, where, "modulus"), d = get_u32(j, where, "dimension");
        if (kind == "MatrixRing") return ringspec::MatrixRing{q, d};
        if (kind == "UpperTriangularRing") return ringspec::UpperTriangularRing{q, d};
        return ringspec::DiagonalScalarRing{q, d};
    }
    if (kind == "ExplicitTables") {
        allow_keys(j, where, {"kind", "add", "mul", "zero", "one"});
        const auto& add = need(j, where, "add");
        if (!add.is_array() || add.empty()) bad(where, "'add' must be a non-empty array");
        const std::size_t n = add.size();
        ringspec::ExplicitTables s;
        s.add = unflatten(get_table(j, where, "add", n, n, n), n);
        s.mul = unflatten(get_table(j, where, "mul", n, n, n), n);
        s.zero = get_u32(j, where, "zero");
        s.one = get_u32(j, where, "one");
        return s;
    }
    bad(where, "unknown ring kind '" + kind + "'");
}

struct ParsedModule {
    std::shared_ptr<const Bimodule> module;
    std::optional<MatrixCarrier> carrier;
};

ParsedModule parse_module(const json& j, const std::string& where, std::shared_ptr<const FiniteRing> left,
                          std::shared_ptr<const FiniteRing> right, std::size_t cap) {
    const auto& c = need(j, where, "carrier");
    if (!c.is_string()) bad(where, "'carrier' must be a string");
    ParsedModule out;
    if (c == "matrix_block") {
        allow_keys(j, where, {"carrier", "modulus", "rows", "cols", "free"});
        MatrixCarrier mc;
        mc.modulus = get_u32(j, where, "modulus");
        mc.rows = get_u32(j, where, "rows");
        mc.cols = get_u32(j, where, "cols");
        if (mc.modulus < 2) bad(where, "modulus must be at least 2");
        const auto& free = need(j, where, "free");
        if (!free.is_array()) bad(where, "'free' must be an array of [row, col] pairs");
        for (const auto& p : free) {
            if (!p.is_array() || p.size() != 2 || !non_negative(p[0]) || !non_negative(p[1]))
                bad(where, "'free' entries must be [row, col]");
            const auto r = p[0].get<std::uint32_t>(), col = p[1].get<std::uint32_t>();
            if (r >= mc.rows || col >= mc.cols) bad(where, "free position outside the carrier shape");
            mc.free.emplace_back(r, col);
        }
        if (mc.size() > cap) throw SizeLimitExceeded(where + ": carrier exceeds the size cap");
        out.module = Bimodule::build(matrix_block_bimodule(left, right, mc), cap);
        out.carrier = mc;
        return out;
    }
    if (c == "tables") {
        allow_keys(j, where, {"carrier", "size", "zero", "add", "left_action", "right_action"});
        BimoduleSpec s;
        s.size = get_uint(j, where, "size");
        if (s.size == 0) bad(where, "size must be positive");
        if (s.size > cap) throw SizeLimitExceeded(where + ": module exceeds the size cap");
        s.zero = get_u32(j, where, "zero");
        s.add = get_table(j, where, "add", s.size, s.size, s.size);
        s.left_action = get_table(j, where, "left_action", left->size(), s.size, s.size);
        s.right_action = get_table(j, where, "right_action", s.size, right->size(), s.size);
        s.left = std::move(left);
        s.right = std::move(right);
        out.module = Bimodule::build(std::move(s), cap);
        return out;
    }
    bad(where, "unknown carrier '" + c.get<std::string>() + "'");
}

Limits parse_limits(const json& j) {
    Limits l;
    if (j.is_null()) return l;
    allow_keys(j, "limits", {"ring_cap", "scan_cap", "tri_cap", "witness_cap", "allow_unfaithful"});
    if (j.contains("ring_cap")) l.ring_cap = get_uint(j, "limits", "ring_cap");
    if (j.contains("scan_cap")) l.scan_cap = get_uint(j, "limits", "scan_cap");
    if (j.contains("tri_cap")) l.tri_cap = get_uint(j, "limits", "tri_cap");
    if (j.contains("witness_cap")) l.witness_cap = get_uint(j, "limits", "witness_cap");
    if (j.contains("allow_unfaithful")) {
        if (!j["allow_unfaithful"].is_boolean()) bad("limits", "'allow_unfaithful' must be a boolean");
        l.allow_unfaithful = j["allow_unfaithful"].get<bool>();
    }
    return l;
}

ordered_json ring_spec_json(const FiniteRing& r) {
    const auto t = r.to_explicit();
    return {{"kind", "ExplicitTables"}, {"add", t.add}, {"mul", t.mul}, {"zero", t.zero}, {"one", t.one}};
}

ordered_json module_json(const Bimodule& m) {
    const auto& s = m.spec();
    return {{"carrier", "tables"},
            {"size", s.size},
            {"zero", s.zero},
            {"add", unflatten(s.add, s.size)},
            {"left_action", unflatten(s.left_action, s.size)},
            {"right_action", unflatten(s.right_action, m.right_ring().size())}};
}

ordered_json default_limits_json() {
    const Limits l;
    return {{"ring_cap", l.ring_cap},
            {"scan_cap", l.scan_cap},
            {"witness_cap", l.witness_cap},
            {"allow_unfaithful", l.allow_unfaithful}};
}

} // namespace

std::string Config::preset() const {
    return ring.contains("preset") ? ring["preset"].get<std::string>() : "";
}

Config parse_config(const json& j) {
    allow_keys(j, "document", {"version", "ring", "limits", "output"});
    Config c;
    const auto v = get_uint(j, "document", "version");
    if (v != kConfigVersion) bad("document", "unsupported version " + std::to_string(v));
    c.version = static_cast<int>(v);
    c.ring = need(j, "document", "ring");
    if (!c.ring.is_object()) bad("ring", "must be an object");
    const bool has_preset = c.ring.contains("preset"), has_explicit = c.ring.contains("explicit");
    if (has_preset == has_explicit) bad("ring", "give exactly one of 'preset' or 'explicit'");
    if (has_preset) {
        allow_keys(c.ring, "ring", {"preset", "modulus"});
        if (!c.ring["preset"].is_string()) bad("ring", "'preset' must be a string");
        const auto p = c.ring["preset"].get<std::string>();
        if (p != "ut3" && p != "example21") bad("ring", "unknown preset '" + p + "'");
        get_u32(c.ring, "ring", "modulus");
    } else {
        allow_keys(c.ring, "ring", {"explicit"});
        allow_keys(c.ring["explicit"], "ring.explicit", {"rings", "modules", "pairing"});
    }
    c.limits = parse_limits(j.contains("limits") ? j["limits"] : json());
    if (j.contains("output")) {
        allow_keys(j["output"], "output", {"report"});
        if (j["output"].contains("report")) {
            if (!j["output"]["report"].is_string()) bad("output", "'report' must be a path string");
            c.report_path = j["output"]["report"].get<std::string>();
        }
    }
    Fnv1a h;
    h.bytes(j.dump());
    c.digest = h.value();
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read config " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return parse_config(j);
}

TriRingConfig build_tri_config(const Config& c) {
    const auto cap = c.limits.ring_cap;
    const auto preset = c.preset();
    if (preset == "ut3") return preset_ut3_config(c.ring["modulus"].get<std::uint32_t>(), cap);
    if (preset == "example21") return preset_example21_config(c.ring["modulus"].get<std::uint32_t>(), cap);

    const auto& ex = c.ring["explicit"];
    const auto& rings = need(ex, "ring.explicit", "rings");
    allow_keys(rings, "rings", {"R1", "R2", "R3"});
    TriRingConfig t;
    t.r1 = FiniteRing::build(parse_ring_spec(need(rings, "rings", "R1"), "rings.R1"), cap);
    t.r2 = FiniteRing::build(parse_ring_spec(need(rings, "rings", "R2"), "rings.R2"), cap);
    t.r3 = FiniteRing::build(parse_ring_spec(need(rings, "rings", "R3"), "rings.R3"), cap);
    const auto& mods = need(ex, "ring.explicit", "modules");
    allow_keys(mods, "modules", {"M12", "M13", "M23"});
    auto m12 = parse_module(need(mods, "modules", "M12"), "modules.M12", t.r1, t.r2, cap);
    auto m13 = parse_module(need(mods, "modules", "M13"), "modules.M13", t.r1, t.r3, cap);
    auto m23 = parse_module(need(mods, "modules", "M23"), "modules.M23", t.r2, t.r3, cap);
    t.m12 = m12.module;
    t.m13 = m13.module;
    t.m23 = m23.module;

    const auto& p = need(ex, "ring.explicit", "pairing");
    const auto& kind = need(p, "pairing", "kind");
    if (kind == "matrix_block") {
        allow_keys(p, "pairing", {"kind"});
        if (!m12.carrier || !m13.carrier || !m23.carrier)
            bad("pairing", "matrix_block pairing needs matrix_block carriers for all modules");
        t.pairing = matrix_block_pairing(*m12.carrier, *m23.carrier, *m13.carrier);
    } else if (kind == "table") {
        allow_keys(p, "pairing", {"kind", "table"});
        t.pairing = get_table(p, "pairing", "table", t.m12->size(), t.m23->size(), t.m13->size());
    } else {
        bad("pairing", "'kind' must be \"matrix_block\" or \"table\"");
    }
    return t;
}

std::shared_ptr<const TriRing3> build_ring(const Config& c) {
    return TriRing3::build(build_tri_config(c), c.limits);
}

ordered_json explicit_ring_json(const TriRing3& t) {
    ordered_json rings = {{"R1", ring_spec_json(t.r1())}, {"R2", ring_spec_json(t.r2())}, {"R3", ring_spec_json(t.r3())}};
    ordered_json mods = {{"M12", module_json(t.m12())}, {"M13", module_json(t.m13())}, {"M23", module_json(t.m23())}};
    ordered_json pairing = {{"kind", "table"}, {"table", unflatten(t.pairing().table(), t.m23().size())}};
    return {{"explicit", {{"rings", rings}, {"modules", mods}, {"pairing", pairing}}}};
}

ordered_json preset_config_json(const std::string& preset, std::uint32_t modulus, bool explicit_tables) {
    if (preset != "ut3" && preset != "example21") throw InputError("unknown preset '" + preset + "'");
    ordered_json ring;
    if (explicit_tables) {
        Limits probe;
        probe.scan_cap = 0;
        const auto t = preset == "ut3" ? preset_ut3(modulus, probe) : preset_example21(modulus, probe);
        ring = explicit_ring_json(*t);
    } else {
        if (modulus < 2) throw InputError("preset modulus must be at least 2, got " + std::to_string(modulus));
        ring = {{"preset", preset}, {"modulus", modulus}};
    }
    return {{"version", kConfigVersion}, {"ring", ring}, {"limits", default_limits_json()}};
}

} // namespace tri3
