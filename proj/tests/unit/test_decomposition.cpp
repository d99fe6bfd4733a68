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

#include <tri3/decomposition.hpp>
#include <tri3/error.hpp>

using namespace tri3;

namespace {

const std::vector<std::string> kAuditedLemmas = {
    "3.2", "3.3(a)", "3.3(b)", "3.3(c)", "3.3(d)", "3.4", "3.5", "3.6(1)", "3.6(2)", "3.6(3)",
    "gamma1", "gamma2", "xi2", "Claim 2"};

bool has_pass(const PipelineTrace& tr, const std::string& lemma) {
    bool any = false;
    for (const auto& s : tr.steps)
        if (s.lemma == lemma) {
            if (s.status == StepStatus::Fail) return false;
            any = any || s.status == StepStatus::Pass;
        }
    return any;
}

Index elem_m13(const TriRing3& t) {
    return t.encode({0, 0, 1, 0, 0, 0});
}

} // namespace

TEST_SUITE("decomposition") {

TEST_CASE("zero map decomposes to zero in every mode") {
    const auto& p = fixtures::ut3_z2();
    const Context c{*p.t, p.facts};
    for (auto m : {Mode::T31K1, Mode::T31K3, Mode::T22}) {
        const auto r = decompose(c, EndoMap::zero(*p.t), m);
        CHECK(r.delta == EndoMap::zero(*p.t));
        CHECK(r.gamma == EndoMap::zero(*p.t));
        CHECK(r.xi == EndoMap::zero(*p.t));
        CHECK(r.trace.all_pass());
    }
}

TEST_CASE("reduce_inner") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    auto [d0, f0] = reduce_inner(c, EndoMap::zero(t), 1);
    CHECK(d0 == EndoMap::zero(t));
    CHECK(f0 == EndoMap::zero(t));
    const auto phi = inner_derivation(t, t.q_prime(1));
    auto [d, phi1] = reduce_inner(c, phi, 1);
    CHECK(d == EndoMap::zero(t));
    CHECK(phi1 == phi);
    const auto g = gen_mld(t, p.facts, MldRecipe{7});
    for (int k : {1, 3}) {
        PipelineTrace tr;
        auto [dk, pk] = reduce_inner(c, g, k, &tr);
        CHECK(map_add(t, dk, pk) == g);
        CHECK(tr.all_pass());
        CHECK(tr.find("corner-identity") != nullptr);
    }
    CHECK_THROWS_AS(reduce_inner(c, g, 2), InputError);
}

TEST_CASE("lemma report passes on zero and on a seeded phi1, fails on a mutation") {
    const auto& p = fixtures::ut3_z3();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    for (const auto& s : lemma_invariant_report(c, EndoMap::zero(t), 1)) CHECK(s.status == StepStatus::Pass);
    const auto phi = gen_mld(t, p.facts, MldRecipe{11});
    for (int k : {1, 3}) {
        auto phi1 = reduce_inner(c, phi, k).second;
        const auto steps = lemma_invariant_report(c, phi1, k);
        CHECK(steps.size() == 12);
        for (const auto& s : steps) CHECK(s.status != StepStatus::Fail);
        phi1.set(t.q(1), t.add(phi1(t.q(1)), elem_m13(t)));
        bool failed = false;
        for (const auto& s : lemma_invariant_report(c, phi1, k, false)) failed = failed || s.status == StepStatus::Fail;
        CHECK(failed);
        CHECK_THROWS_AS(lemma_invariant_report(c, phi1, k, true), PipelineFailure);
    }
}

TEST_CASE("gamma1, delta1 and gamma2 on trivial inputs") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    CHECK(build_gamma1(c, EndoMap::zero(t), 1) == EndoMap::zero(t));
    // range inside M1 kills both corner projections
    const auto m_only = inner_derivation(t, t.q(1));
    CHECK(build_gamma1(c, m_only, 1) == EndoMap::zero(t));
    auto [d1, x1] = build_delta1(c, EndoMap::zero(t), 1);
    CHECK(d1 == EndoMap::zero(t));
    CHECK(x1 == EndoMap::zero(t));
    // a derivation is reproduced
    auto [d2, x2] = build_delta1(c, m_only, 1);
    CHECK(d2 == m_only);
    CHECK(x2 == EndoMap::zero(t));
    auto [g2, xi2] = build_gamma2(c, EndoMap::zero(t), 1);
    CHECK(g2 == EndoMap::zero(t));
    CHECK(xi2 == EndoMap::zero(t));
}

TEST_CASE("a corrupted xi1 escapes its range") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    auto xi1 = EndoMap::zero(t);
    xi1.set(3, t.q(1));
    PipelineTrace tr;
    CHECK_THROWS_AS(build_gamma2(c, xi1, 1, &tr), PipelineFailure);
    CHECK(tr.first_failure() != nullptr);
}

TEST_CASE("seeded decompositions audit every lemma and agree across modes") {
    for (const auto* pp : {&fixtures::ut3_z2(), &fixtures::ut3_z3(), &fixtures::ex21_z2()}) {
        const auto& p = *pp;
        const auto& t = *p.t;
        const Context c{t, p.facts};
        for (std::uint64_t seed : {1u, 42u, 99u}) {
            const auto phi = gen_mld(t, p.facts, MldRecipe{seed});
            const auto r = decompose_theorem22(c, phi);
            CHECK(r.standard_form);
            for (const auto& l : kAuditedLemmas) CHECK_MESSAGE(has_pass(r.trace, l), l);
            CHECK(verify_standard_form(c, phi, r.delta, r.gamma).holds);
            CHECK(r.xi == EndoMap::zero(t));
            for (auto m : {Mode::T31K1, Mode::T31K3}) {
                const auto s = decompose(c, phi, m);
                CHECK(map_add(t, map_add(t, s.delta, s.gamma), s.xi) == phi);
                CHECK(verify_standard_form(c, phi, map_add(t, s.delta, s.xi), s.gamma).holds);
                CHECK(has_pass(s.trace, m == Mode::T31K1 ? "3.3(b)" : "3.3'(b)"));
            }
        }
    }
}

TEST_CASE("ut3/Z2 forces xi = 0 in the k = 1 pipeline") {
    const auto& p = fixtures::ut3_z2();
    const Context c{*p.t, p.facts};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = decompose_theorem31(c, gen_mld(*p.t, p.facts, MldRecipe{seed}), 1);
        CHECK(r.xi == EndoMap::zero(*p.t));
    }
}

TEST_CASE("serial execution gives the same result") {
    const auto& p = fixtures::ex21_z2();
    const auto phi = gen_mld(*p.t, p.facts, MldRecipe{5});
    const auto a = decompose(Context{*p.t, p.facts, Exec::Parallel}, phi, Mode::T22);
    const auto b = decompose(Context{*p.t, p.facts, Exec::Serial}, phi, Mode::T22);
    CHECK(a.delta == b.delta);
    CHECK(a.gamma == b.gamma);
    CHECK(a.trace.steps.size() == b.trace.steps.size());
}

TEST_CASE("refusals") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    const auto sq = EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); });
    CHECK_THROWS_AS(decompose(c, sq, Mode::T22), NotMLD);
    CHECK_THROWS_AS(decompose(c, EndoMap::zero(*fixtures::ut3_z3().t), Mode::T22), HashMismatch);

    const auto& f = fixtures::assumption_failure();
    const Context cf{*f.t, f.facts};
    const auto phi = gen_mld(*f.t, f.facts, MldRecipe{3});
    CHECK_THROWS_AS(decompose(cf, phi, Mode::T22), StandardAssumptionViolated);
    CHECK_THROWS_AS(decompose(cf, phi, Mode::T31K1), StandardAssumptionViolated);
    CHECK_THROWS_AS(parse_mode("t31k2"), InputError);
    CHECK(parse_mode("t31k3") == Mode::T31K3);
}

TEST_CASE("verify_standard_form") {
    const auto& p = fixtures::ut3_z3();
    const auto& t = *p.t;
    const Context c{t, p.facts};
    const auto z = EndoMap::zero(t);
    CHECK(verify_standard_form(c, z, z, z).holds);
    const auto d = inner_derivation(t, 100);
    CHECK(verify_standard_form(c, d, d, z).holds);
    const auto phi = gen_mld(t, p.facts, MldRecipe{8});
    const auto r = decompose_theorem22(c, phi);
    auto bad = r.delta;
    bad.set(200, t.add(bad(200), t.one()));
    const auto v = verify_standard_form(c, phi, bad, r.gamma);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.witnesses.empty());
}

}
