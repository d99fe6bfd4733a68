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
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include <tri3/tri_ring.hpp>

namespace tri3 {

inline constexpr int kConfigVersion = 1;

/// A parsed configuration file.
///
///   {"version": 1,
///    "ring": {"preset": "ut3" | "example21", "modulus": n}
///          | {"explicit": {"rings": {...}, "modules": {...}, "pairing": {...}}},
///    "limits": {"ring_cap", "scan_cap", "witness_cap", "allow_unfaithful"},
///    "output": {"report": path}}
///
/// "limits" and "output" are optional. See README.md for the explicit form.
struct Config {
    int version = kConfigVersion;
    nlohmann::json ring;
    Limits limits;
    std::optional<std::string> report_path;
    /// FNV-1a of the canonical (sorted-key, compact) dump of the whole file.
    std::uint64_t digest = 0;

    /// Preset name, or empty for an explicit ring.
    std::string preset() const;
};

/// Throws InputError on any schema violation.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);

TriRingConfig build_tri_config(const Config& c);
std::shared_ptr<const TriRing3> build_ring(const Config& c);

/// A complete config document for a preset. With `explicit_tables` the ring
/// is written as explicit operation tables that build the same ring (same
/// hash).
nlohmann::ordered_json preset_config_json(const std::string& preset, std::uint32_t modulus,
                                          bool explicit_tables = false);

/// Explicit-table form of an arbitrary built ring.
nlohmann::ordered_json explicit_ring_json(const TriRing3& t);

} // namespace tri3
