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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <tri3/decomposition.hpp>
#include <tri3/digest.hpp>
#include <tri3/example21.hpp>
#include <tri3/generators.hpp>
#include <tri3/report.hpp>

using namespace tri3;

namespace {

struct Preset {
    std::string name;
    std::shared_ptr<const TriRing3> t;
    RingFacts facts;
};

std::vector<Preset> build_presets() {
    std::vector<Preset> out;
    for (auto [name, t] : {std::pair{"ut3/Z2", preset_ut3(2)}, std::pair{"ut3/Z3", preset_ut3(3)},
                           std::pair{"example21/Z2", preset_example21(2)}})
        out.push_back({name, t, RingFacts::compute(*t)});
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> kAudit = {"3.2",    "3.3(a)", "3.3(b)", "3.3(c)", "3.3(d)", "3.4",  "3.5",
                                         "3.6(1)", "3.6(2)", "3.6(3)", "gamma1", "gamma2", "xi2", "Claim 2"};
const std::vector<std::string> kAuditIds = {"product-am", "product-mb", "gamma1-central", "gamma2-central",
                                            "xi2-range", "phi2-zero"};

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::size_t> sizes;
    for (auto t : {preset_ut3(2), preset_ut3(3), preset_example21(2)}) {
        const auto brute = center_brute_force(*t);
        const auto chr = center_characterized(*t);
        o.require(brute.members == chr.members, "center mismatch on ring " + t->hash_hex());
        sizes.push_back(brute.size());
        if (t->r1().matrix_dimension() == 2) {
            o.require(brute.size() == 2, "example21/Z2 center size");
            for (auto z : brute.members) {
                const auto m = example21_embed(*t, z);
                for (int i = 0; i < 36; ++i) o.require(m[i] == (i % 7 == 0 ? m[0] : 0u), "center not diag(z,...,z)");
            }
        }
    }
    o.require(sizes == std::vector<std::size_t>{2, 3, 2}, "center sizes");
    const double s = seconds_since(t0);
    o.require(s < 5.0, "runtime over 5 s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "sizes 2/3/2, %.2f s", s);
    if (o.pass) o.detail = buf;
    return o;
}

Outcome criterion2(const std::vector<Preset>& ps) {
    Outcome o;
    for (const auto& p : ps) {
        for (int i = 1; i <= 3; ++i) {
            const auto a = check_standard_assumption(*p.t, p.facts.center, i);
            o.require(a.holds && a.projection == corner_center(*p.t, diagonal_corner_mask(i, false)),
                      p.name + " standard assumption i=" + std::to_string(i));
        }
        for (int k : {1, 3}) {
            const auto a = check_prime_assumption(*p.t, p.facts.center, k);
            o.require(a.holds && a.projection == corner_center(*p.t, diagonal_corner_mask(k, true)),
                      p.name + " primed corner k=" + std::to_string(k));
        }
    }
    if (o.pass) o.detail = "i = 1,2,3 and k = 1,3 on 3 presets";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        Limits l;
        l.scan_cap = q == 2 ? l.scan_cap : 0;
        const auto t = preset_example21(q, l);
        NotTriangularReport r;
        try {
            r = check_not_triangular_example21(*t);
        } catch (const Error& e) {
            o.require(false, "modulus " + std::to_string(q) + ": " + e.what());
            continue;
        }
        const auto& w1 = r.way1_witness_matrix;
        const auto& w2 = r.way2_witness_matrix;
        o.require(r.way1_not_faithful && r.way1_witness != t->zero() && w1[3] == 1,
                  "Way 1 witness at modulus " + std::to_string(q));
        o.require(r.way2_not_faithful && r.way2_witness != t->zero() && w2[2 * 6 + 5] == 1,
                  "Way 2 witness at modulus " + std::to_string(q));
        o.require(r.not_triangular, "some partition is triangular");
    }
    if (o.pass) o.detail = "moduli 2 and 3, witnesses B(1,4) = 1 and C(1,4) = 1";
    return o;
}

struct RoundTrip {
    Outcome c4, c5;
    double seconds = 0;
    std::size_t runs = 0;
};

RoundTrip criteria4and5(const std::vector<Preset>& ps) {
    RoundTrip rt;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& p : ps) {
        const auto& t = *p.t;
        const Context c{t, p.facts};
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            MldRecipe rec{seed};
            rec.use_central = seed % 10 != 0;
            rec.use_inner = seed % 10 != 5;
            EndoMap phi;
            try {
                phi = gen_mld(t, p.facts, rec);
            } catch (const Error& e) {
                rt.c4.require(false, p.name + " seed " + std::to_string(seed) + ": " + e.what());
                continue;
            }
            const std::string tag = p.name + " seed " + std::to_string(seed);
            rt.c4.require(is_mult_lie_derivation(t, phi).holds, tag + ": generated map not MLD");
            DecompositionResult r;
            try {
                r = decompose_theorem22(c, phi);
            } catch (const Error& e) {
                rt.c4.require(false, tag + ": " + e.what());
                rt.c5.require(false, tag + ": no trace");
                continue;
            }
            ++rt.runs;
            rt.c4.require(is_derivation(t, r.delta).holds, tag + ": delta not a derivation");
            rt.c4.require(is_central_vanishing_on_commutators(t, r.gamma, p.facts.center, p.facts.commutators).holds,
                          tag + ": gamma not central / commutator-killing");
            rt.c4.require(map_add(t, r.delta, r.gamma) == phi, tag + ": delta + gamma != phi");
            for (const auto& lemma : kAudit) {
                bool seen = false, ok = true;
                for (const auto& s : r.trace.steps)
                    if (s.lemma == lemma) {
                        seen = seen || s.status == StepStatus::Pass;
                        ok = ok && s.status != StepStatus::Fail;
                    }
                rt.c5.require(seen && ok, tag + ": lemma " + lemma + " not PASS");
            }
            for (const auto& id : kAuditIds) {
                const auto* s = r.trace.find(id);
                rt.c5.require(s && s->status == StepStatus::Pass, tag + ": step " + id + " not PASS");
            }
        }
    }
    rt.seconds = seconds_since(t0);
    rt.c4.require(rt.seconds < 120.0, "runtime over 2 min");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu decompositions, %.1f s", rt.runs, rt.seconds);
    if (rt.c4.pass) rt.c4.detail = buf;
    if (rt.c5.pass) rt.c5.detail = std::to_string(rt.runs) + " traces, " + std::to_string(kAudit.size()) + " lemmas each";
    return rt;
}

Outcome criterion6(const std::vector<Preset>& ps) {
    Outcome o;
    const auto& p = ps[0];
    const auto& t = *p.t;
    for (const auto& v : non_mld_variants()) {
        EndoMap f;
        if (v == "squaring") f = EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); });
        else if (v == "constant_I") f = EndoMap::from_function(t, [&](Index) { return t.one(); });
        else f = EndoMap::identity(t);
        const auto r = is_mult_lie_derivation(t, f);
        o.require(!r.holds && !r.witnesses.empty() && r.witnesses.front().size() == 2, v + " not rejected with a pair");
    }
    std::size_t mutations = 0;
    for (const auto* pp : {&ps[0], &ps[1]}) {
        const auto& u = *pp->t;
        const Context c{u, pp->facts};
        const auto phi = gen_mld(u, pp->facts, MldRecipe{2024});
        const auto r = decompose_theorem22(c, phi);
        o.require(verify_standard_form(c, phi, r.delta, r.gamma).holds, "unmutated delta rejected");
        // every entry, every other value on ut3/Z2; every entry, one value on ut3/Z3
        for (Index x = 0; x < u.size(); ++x) {
            for (Index v = 1; v < u.size(); ++v) {
                auto bad = r.delta;
                bad.set(x, (r.delta(x) + v) % static_cast<Index>(u.size()));
                ++mutations;
                o.require(!verify_standard_form(c, phi, bad, r.gamma).holds, "mutation undetected");
                if (u.size() > 64) break;
            }
        }
    }
    if (o.pass) o.detail = "3 controls rejected, " + std::to_string(mutations) + " mutations detected";
    return o;
}

// Reports for a fixed set of decompositions, rendered twice from scratch.
std::string suite_reports(Exec e) {
    std::string all;
    for (auto t : {preset_ut3(2), preset_ut3(3), preset_example21(2)}) {
        const auto facts = RingFacts::compute(*t, e);
        const Context c{*t, facts, e};
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto phi = gen_mld(*t, facts, MldRecipe{seed}, e);
            for (auto m : {Mode::T22, Mode::T31K1, Mode::T31K3}) {
                const auto r = decompose(c, phi, m);
                auto rep = report_header("decompose", *t);
                rep["mode"] = to_string(m);
                rep["input_digest"] = to_hex(phi.digest());
                rep["steps"] = trace_json(r.trace);
                rep["components"] = {{"delta", to_hex(r.delta.digest())},
                                     {"gamma", to_hex(r.gamma.digest())},
                                     {"xi", to_hex(r.xi.digest())}};
                set_verdict(rep, r.trace.all_pass());
                all += render_report(rep);
                all += map_to_text(r.delta) + map_to_text(r.gamma) + map_to_text(r.xi);
            }
        }
    }
    return all;
}

Outcome criterion7() {
    Outcome o;
    const auto a = suite_reports(Exec::Parallel);
    const auto b = suite_reports(Exec::Parallel);
    const auto s = suite_reports(Exec::Serial);
    o.require(a == b, "two parallel runs differ");
    o.require(a == s, "parallel and serial runs differ");
    Fnv1a h;
    h.bytes(a);
    if (o.pass) o.detail = std::to_string(a.size()) + " bytes, digest " + to_hex(h.value());
    return o;
}

} // namespace

int main() {
    bool all = true;
    auto line = [&](int n, const std::string& name, const Outcome& o) {
        std::printf("criterion %d %s: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    };
    try {
        line(1, "center agreement", criterion1());
        const auto ps = build_presets();
        line(2, "standard assumption suite", criterion2(ps));
        line(3, "6x6 preset non-triangularity", criterion3());
        const auto rt = criteria4and5(ps);
        line(4, "standard-form round trip", rt.c4);
        line(5, "lemma-by-lemma audit", rt.c5);
        line(6, "negative controls", criterion6(ps));
        line(7, "determinism", criterion7());
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 1;
    }
    return all ? 0 : 1;
}
