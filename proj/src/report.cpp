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


#include <tri3/report.hpp>

#include <fstream>

#include <tri3/digest.hpp>
#include <tri3/error.hpp>

namespace tri3 {

Report report_header(const std::string& command) {
    return {{"format_version", kReportFormatVersion}, {"tool", kToolName}, {"command", command}};
}

Report report_header(const std::string& command, const TriRing3& t) {
    auto r = report_header(command);
    r["ring_hash"] = t.hash_hex();
    return r;
}

Report verdict_json(const Verdict& v) {
    return {{"property", v.property},
            {"holds", v.holds},
            {"checked", v.checked},
            {"violations", v.violations},
            {"witnesses", v.witnesses}};
}

Report trace_json(const PipelineTrace& trace) {
    Report steps = Report::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"id", s.id},
                         {"lemma", s.lemma},
                         {"status", to_string(s.status)},
                         {"property", s.property},
                         {"checked", s.checked},
                         {"violations", s.violations},
                         {"witnesses", s.witnesses}});
    return steps;
}

Report ring_summary_json(const TriRing3& t) {
    Report faith = Report::array();
    for (const auto& f : t.faithfulness()) {
        Report e = {{"module", f.module}, {"side", to_string(f.side)}, {"faithful", f.faithful}};
        e["witness"] = f.witness ? Report(*f.witness) : Report(nullptr);
        faith.push_back(e);
    }
    return {{"size", t.size()},
            {"components",
             {{"R1", t.r1().size()},
              {"M12", t.m12().size()},
              {"M13", t.m13().size()},
              {"R2", t.r2().size()},
              {"M23", t.m23().size()},
              {"R3", t.r3().size()}}},
            {"dense_tables", t.dense()},
            {"triples_checked", t.triples_checked()},
            {"triples_exhaustive", t.triples_exhaustive()},
            {"faithfulness", faith}};
}

Report assumption_json(const AssumptionVerdict& a) {
    return {{"name", a.name},
            {"index", a.index},
            {"prime", a.prime},
            {"holds", a.holds},
            {"projection", a.projection},
            {"corner_center", a.corner_center},
            {"missing", a.missing},
            {"extra", a.extra}};
}

Report not_triangular_json(const NotTriangularReport& r) {
    auto opt = [](const std::optional<Index>& v) { return v ? Report(*v) : Report(nullptr); };
    Report parts = Report::array();
    for (const auto& p : r.partitions) {
        Report e = {{"split", std::to_string(p.p) + "+" + std::to_string(6 - p.p)},
                    {"lower_block_zero", p.lower_zero},
                    {"lower_witness", opt(p.lower_witness)},
                    {"block_sizes", {p.b_size, p.m_size, p.c_size}},
                    {"block_product", p.is_product},
                    {"faithfulness_checked", p.checked_faithfulness}};
        if (p.checked_faithfulness) {
            e["left_faithful"] = p.left_faithful;
            e["left_witness"] = opt(p.left_witness);
            e["right_faithful"] = p.right_faithful;
            e["right_witness"] = opt(p.right_witness);
        }
        e["note"] = p.note;
        parts.push_back(e);
    }
    auto rows = [](const std::vector<std::uint32_t>& m) {
        std::vector<std::vector<std::uint32_t>> out;
        for (int i = 0; i < 6; ++i) out.emplace_back(m.begin() + i * 6, m.begin() + i * 6 + 6);
        return out;
    };
    return {{"modulus", r.modulus},
            {"partitions", parts},
            {"way1",
             {{"split", "4+2"},
              {"left_faithful", !r.way1_not_faithful},
              {"witness", r.way1_witness},
              {"witness_matrix", rows(r.way1_witness_matrix)}}},
            {"way2",
             {{"split", "2+4"},
              {"right_faithful", !r.way2_not_faithful},
              {"witness", r.way2_witness},
              {"witness_matrix", rows(r.way2_witness_matrix)}}},
            {"not_triangular", r.not_triangular}};
}

void set_verdict(Report& r, bool pass) {
    r["verdict"] = pass ? "pass" : "fail";
}

std::string render_report(const Report& r) {
    return r.dump(2) + "\n";
}

void write_report(const std::filesystem::path& path, const Report& r) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write report " + path.string());
    out << render_report(r);
    if (!out) throw InputError("failed writing report " + path.string());
}

} // namespace tri3
