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


#include <doctest.h>

#include "fixtures.hpp"

#include <tri3/config.hpp>
#include <tri3/error.hpp>
#include <tri3/report.hpp>

using namespace tri3;
using nlohmann::json;

TEST_SUITE("config") {

TEST_CASE("preset configs") {
    const auto c = parse_config(json::parse(preset_config_json("ut3", 2).dump()));
    CHECK(c.preset() == "ut3");
    CHECK(build_ring(c)->hash() == fixtures::ut3_z2().t->hash());
    CHECK(c.limits.witness_cap == 5);
    CHECK_FALSE(c.report_path);
    CHECK_THROWS_AS(preset_config_json("ut3", 1), InputError);
    auto bad = json::parse(R"({"version":1,"ring":{"preset":"ut3","modulus":1}})");
    CHECK_THROWS_AS(build_ring(parse_config(bad)), InputError);
}

TEST_CASE("explicit tables rebuild the preset ring") {
    for (const char* name : {"ut3", "example21"}) {
        const auto doc = preset_config_json(name, 2, true);
        const auto c = parse_config(json::parse(doc.dump()));
        CHECK(c.preset().empty());
        const auto t = build_ring(c);
        const auto& ref = std::string(name) == "ut3" ? *fixtures::ut3_z2().t : *fixtures::ex21_z2().t;
        CHECK(t->hash() == ref.hash());
        CHECK(t->size() == ref.size());
    }
}

TEST_CASE("matrix_block carriers in explicit configs") {
    const auto j = json::parse(R"({
      "version": 1,
      "ring": {"explicit": {
        "rings": {"R1": {"kind": "Zn", "modulus": 2}, "R2": {"kind": "Zn", "modulus": 2},
                  "R3": {"kind": "Zn", "modulus": 2}},
        "modules": {
          "M12": {"carrier": "matrix_block", "modulus": 2, "rows": 1, "cols": 1, "free": [[0, 0]]},
          "M13": {"carrier": "matrix_block", "modulus": 2, "rows": 1, "cols": 1, "free": [[0, 0]]},
          "M23": {"carrier": "matrix_block", "modulus": 2, "rows": 1, "cols": 1, "free": [[0, 0]]}},
        "pairing": {"kind": "matrix_block"}}},
      "limits": {"witness_cap": 3},
      "output": {"report": "r.json"}
    })");
    const auto c = parse_config(j);
    CHECK(c.limits.witness_cap == 3);
    CHECK(c.report_path == std::string("r.json"));
    CHECK(build_ring(c)->hash() == fixtures::ut3_z2().t->hash());
}

TEST_CASE("schema violations are input errors") {
    const char* docs[] = {
        R"([])",
        R"({"ring":{"preset":"ut3","modulus":2}})",
        R"({"version":2,"ring":{"preset":"ut3","modulus":2}})",
        R"({"version":1,"ring":{"preset":"ut4","modulus":2}})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":-2}})",
        R"({"version":1,"ring":{"preset":"ut3"}})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":2,"explicit":{}}})",
        R"({"version":1,"ring":{}})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":2},"extra":1})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":2},"limits":{"scan":1}})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":2},"limits":{"allow_unfaithful":1}})",
        R"({"version":1,"ring":{"preset":"ut3","modulus":2},"output":{"report":3}})",
    };
    for (const char* d : docs) CHECK_THROWS_AS(parse_config(json::parse(d)), InputError);
    auto j = json::parse(preset_config_json("example21", 2, true).dump());
    j["ring"]["explicit"]["rings"]["R1"]["kind"] = "Quaternion";
    CHECK_THROWS_AS(build_ring(parse_config(j)), InputError);
    j = json::parse(preset_config_json("ut3", 2, true).dump());
    j["ring"]["explicit"]["pairing"]["table"][1][1] = 7;
    CHECK_THROWS_AS(build_ring(parse_config(j)), InputError);
    j = json::parse(preset_config_json("ut3", 2, true).dump());
    j["ring"]["explicit"]["modules"]["M12"]["left_action"][1][1] = 0;
    CHECK_THROWS_AS(build_ring(parse_config(j)), AxiomViolation);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), InputError);
}

TEST_CASE("digest tracks content") {
    const auto a = parse_config(json::parse(preset_config_json("ut3", 2).dump()));
    const auto b = parse_config(json::parse(preset_config_json("ut3", 3).dump()));
    const auto c = parse_config(json::parse(preset_config_json("ut3", 2).dump()));
    CHECK(a.digest != b.digest);
    CHECK(a.digest == c.digest);
}

}

TEST_SUITE("report") {

TEST_CASE("reports carry the format version and ring hash and render deterministically") {
    const auto& t = *fixtures::ut3_z2().t;
    auto r = report_header("validate", t);
    r["ring"] = ring_summary_json(t);
    set_verdict(r, true);
    const auto s = render_report(r);
    CHECK(s == render_report(r));
    CHECK(s.back() == '\n');
    const auto j = json::parse(s);
    CHECK(j["format_version"] == kReportFormatVersion);
    CHECK(j["ring_hash"] == t.hash_hex());
    CHECK(j["verdict"] == "pass");
    CHECK(s.find("\"format_version\"") < s.find("\"ring_hash\""));
}

TEST_CASE("verdict and trace json") {
    Verdict v;
    v.property = "p";
    v.checked = 3;
    v.fail({1, 2}, 5);
    const auto j = verdict_json(v);
    CHECK(j["holds"] == false);
    CHECK(j["witnesses"][0][1] == 2);
    PipelineTrace tr;
    tr.steps.push_back({"a", "3.2", StepStatus::Info, "q", 1, 0, {}});
    CHECK(trace_json(tr)[0]["status"] == "INFO");
}

}
