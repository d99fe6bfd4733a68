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

#include <filesystem>

#include "fixtures.hpp"

#include <tri3/error.hpp>

using namespace tri3;

TEST_SUITE("endo_map") {

TEST_CASE("zero, inner derivations and sums of them are MLDs and derivations") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    CHECK(is_mult_lie_derivation(t, EndoMap::zero(t)).holds);
    CHECK(is_derivation(t, EndoMap::zero(t)).holds);
    for (Index a = 0; a < t.size(); ++a) {
        const auto d = inner_derivation(t, a);
        CHECK(is_mult_lie_derivation(t, d).holds);
        CHECK(is_derivation(t, d).holds);
    }
    for (auto z : p.facts.center.members) CHECK(inner_derivation(t, z) == EndoMap::zero(t));
    CHECK(inner_derivation(t, t.zero()) == EndoMap::zero(t));
    CHECK_THROWS_AS(inner_derivation(t, 64), InputError);
}

TEST_CASE("inner derivation of Q1 is x -> Q1 x Q'1") {
    const auto& t = *fixtures::ut3_z2().t;
    const auto d = inner_derivation(t, t.q(1));
    for (Index x = 0; x < t.size(); ++x) CHECK(d(x) == t.sandwich(t.q(1), x, t.q_prime(1)));
}

TEST_CASE("negative controls match the oracle witnesses") {
    // tests/oracles/matrix_oracle.py: first violating pair and count
    const auto& t = *fixtures::ut3_z2().t;
    const auto sq = EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); });
    const auto ci = EndoMap::from_function(t, [&](Index) { return t.one(); });
    const auto id = EndoMap::identity(t);
    CHECK(t.one() == 41);
    struct Case {
        const EndoMap* map;
        std::vector<Index> first;
        std::uint64_t violations;
    };
    for (const auto& c : {Case{&sq, {1, 2}, 2496}, Case{&ci, {0, 0}, 4096}, Case{&id, {1, 2}, 3168}}) {
        for (auto e : {Exec::Parallel, Exec::Serial}) {
            const auto v = is_mult_lie_derivation(t, *c.map, e);
            CHECK_FALSE(v.holds);
            CHECK(v.violations == c.violations);
            CHECK(v.checked == 4096);
            REQUIRE(!v.witnesses.empty());
            CHECK(v.witnesses.front() == c.first);
            CHECK(v.witnesses.size() == 5);
        }
    }
    CHECK_FALSE(is_additive(t, ci).holds);
    CHECK_FALSE(is_additive(t, sq).holds);
    CHECK(is_leibniz(t, EndoMap::zero(t)).holds);
}

TEST_CASE("central commutator-killing maps") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    const auto g = EndoMap::from_function(t, [&](Index x) { return p.facts.commutators.contains(x) ? t.zero() : t.one(); });
    CHECK(is_central_vanishing_on_commutators(t, g, p.facts.center, p.facts.commutators).holds);
    CHECK(is_mult_lie_derivation(t, g).holds);
    CHECK_FALSE(is_additive(t, g).holds);
    auto bad = g;
    bad.set(0, t.one());
    const auto v = is_central_vanishing_on_commutators(t, bad, p.facts.center, p.facts.commutators);
    CHECK_FALSE(v.holds);
    CHECK(v.witnesses.front() == std::vector<Index>{0});
    auto off = g;
    off.set(1, t.q(1));
    CHECK_FALSE(is_central_vanishing_on_commutators(t, off, p.facts.center, p.facts.commutators).holds);
}

TEST_CASE("map arithmetic") {
    const auto& t = *fixtures::ut3_z3().t;
    const auto f = inner_derivation(t, 17);
    CHECK(map_sub(t, f, f) == EndoMap::zero(t));
    CHECK(map_sub(t, f, EndoMap::zero(t)) == f);
    CHECK(map_add(t, f, EndoMap::zero(t)) == f);
    CHECK(maps_equal(t, f, f, "f = f").holds);
    const auto v = maps_equal(t, f, EndoMap::zero(t), "f = 0");
    CHECK_FALSE(v.holds);
}

TEST_CASE("map files round trip and are bound to their ring") {
    const auto& t = *fixtures::ut3_z2().t;
    const auto f = inner_derivation(t, 5);
    const auto path = std::filesystem::temp_directory_path() / "tri3_map_roundtrip.json";
    write_map_file(path, f);
    const auto g = read_map_file(path, t);
    CHECK(g == f);
    CHECK(g.digest() == f.digest());
    CHECK_THROWS_AS(read_map_file(path, *fixtures::ut3_z3().t), HashMismatch);
    CHECK(map_to_text(f).back() == '\n');
    auto j = map_to_json(f);
    j["entries"][0] = 64;
    CHECK_THROWS_AS(map_from_json(j, t), InputError);
    CHECK_THROWS_AS(read_map_file("/nonexistent/map.json", t), InputError);
    EndoMap shorter(t.hash(), std::vector<Index>(10, 0));
    CHECK_THROWS_AS(require_same_ring(t, shorter), InputError);
    CHECK_THROWS_AS(is_mult_lie_derivation(t, EndoMap::zero(*fixtures::ut3_z3().t)), HashMismatch);
    std::filesystem::remove(path);
}

}

TEST_SUITE("kernels") {

TEST_CASE("parallel and serial scans agree") {
    const auto& p = fixtures::ex21_z2();
    const auto& t = *p.t;
    const auto sq = EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); });
    const auto d = inner_derivation(t, 1234);
    for (const auto* f : {&sq, &d}) {
        for (auto check : {&is_mult_lie_derivation, &is_additive, &is_leibniz}) {
            const auto a = check(t, *f, Exec::Parallel);
            const auto b = check(t, *f, Exec::Serial);
            CHECK(a.holds == b.holds);
            CHECK(a.checked == b.checked);
            CHECK(a.violations == b.violations);
            CHECK(a.witnesses == b.witnesses);
        }
    }
    CHECK(center_brute_force(t, Exec::Parallel).members == center_brute_force(t, Exec::Serial).members);
    CHECK(commutator_set(t, Exec::Parallel).members == commutator_set(t, Exec::Serial).members);
    CHECK(check_lie_closure(t, p.facts.center, Exec::Parallel).holds ==
          check_lie_closure(t, p.facts.center, Exec::Serial).holds);
}

}
