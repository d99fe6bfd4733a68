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

#include <json.hpp>

#include <tri3/decomposition.hpp>
#include <tri3/example21.hpp>
#include <tri3/ring_facts.hpp>
#include <tri3/tri_ring.hpp>
#include <tri3/verdict.hpp>

namespace tri3 {

inline constexpr int kReportFormatVersion = 1;
inline constexpr const char* kToolName = "tri3";

/// Reports are ordered JSON with no timestamps or host data, so identical
/// inputs give byte-identical output.
using Report = nlohmann::ordered_json;

/// {"format_version", "tool", "command", "ring_hash"}
Report report_header(const std::string& command, const TriRing3& t);
/// Same, for failures that happen before a ring exists.
Report report_header(const std::string& command);

Report verdict_json(const Verdict& v);
Report trace_json(const PipelineTrace& trace);
Report ring_summary_json(const TriRing3& t);
Report assumption_json(const AssumptionVerdict& a);
Report not_triangular_json(const NotTriangularReport& r);

/// Sets "verdict" to "pass" or "fail".
void set_verdict(Report& r, bool pass);

/// Two-space indented dump plus a trailing newline.
std::string render_report(const Report& r);
void write_report(const std::filesystem::path& path, const Report& r);

} // namespace tri3
