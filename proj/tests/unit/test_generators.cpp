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

#include <tri3/digest.hpp>
#include <tri3/error.hpp>
#include <tri3/example21.hpp>

using namespace tri3;

TEST_SUITE("generators") {

TEST_CASE("recipes") {
    const auto& p = fixtures::ut3_z2();
    const auto& t = *p.t;
    MldRecipe off;
    off.use_inner = false;
    off.use_central = false;
    CHECK(gen_mld(t, p.facts, off) == EndoMap::zero(t));
    MldRecipe q1;
    q1.inner = t.q(1);
    q1.use_central = false;
    const auto phi = gen_mld(t, p.facts, q1);
    for (Index x = 0; x < t.size(); ++x) CHECK(phi(x) == t.sandwich(t.q(1), x, t.q_prime(1)));
}

TEST_CASE("seeded generation is reproducible") {
    const auto& p = fixtures::ut3_z2();
    const auto a = gen_mld(*p.t, p.facts, MldRecipe{42});
    const auto b = gen_mld(*preset_ut3(2), RingFacts::compute(*preset_ut3(2)), MldRecipe{42});
    CHECK(a == b);
    CHECK(to_hex(a.digest()) == "86d7afd8a16e1219");
    CHECK(gen_mld(*p.t, p.facts, MldRecipe{43}) != a);
    for (const auto* pp : {&fixtures::ut3_z3(), &fixtures::ex21_z2()})
        for (std::uint64_t s = 0; s < 5; ++s)
            CHECK(is_mult_lie_derivation(*pp->t, gen_mld(*pp->t, pp->facts, MldRecipe{s})).holds);
}

TEST_CASE("SplitMix64 reference values") {
    SplitMix64 r(0);
    CHECK(r.next() == 0xe220a8397b1dcdafULL);
    CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("non-MLD controls") {
    const auto& t = *fixtures::ut3_z2().t;
    for (const auto& v : non_mld_variants()) {
        const auto f = gen_non_mld(t, v);
        const auto r = is_mult_lie_derivation(t, f);
        CHECK_FALSE(r.holds);
        CHECK_FALSE(r.witnesses.empty());
    }
    CHECK(gen_non_mld(t) == EndoMap::from_function(t, [&](Index x) { return t.mul(x, x); }));
    CHECK_THROWS_AS(gen_non_mld(t, "cube"), InputError);
}

TEST_CASE("the 6x6 preset is not a triangular ring") {
    for (std::uint32_t q : {2u, 3u}) {
        auto t = q == 2 ? fixtures::ex21_z2().t : [] {
            Limits l;
            l.scan_cap = 0;
            return preset_example21(3, l);
        }();
        const auto r = check_not_triangular_example21(*t);
        CHECK(r.not_triangular);
        CHECK(r.way1_not_faithful);
        CHECK(r.way2_not_faithful);
        CHECK(r.way1_witness_matrix[0 * 6 + 3] == 1);
        CHECK(r.way2_witness_matrix[2 * 6 + 5] == 1);
        REQUIRE(r.partitions.size() == 5);
        CHECK_FALSE(r.partitions[0].lower_zero);
        CHECK_FALSE(r.partitions[2].is_product);
        CHECK_FALSE(r.partitions[4].is_product);
        CHECK(r.partitions[1].left_faithful);
        CHECK(r.partitions[3].right_faithful);
    }
    CHECK_THROWS_AS(check_not_triangular_example21(*fixtures::ut3_z2().t), InputError);
}

TEST_CASE("the 6x6 preset's modules are faithful on both sides") {
    const auto& t = *fixtures::ex21_z2().t;
    CHECK(t.all_faithful());
    CHECK(t.m12().check_faithful(Side::Left).faithful);
}

}
