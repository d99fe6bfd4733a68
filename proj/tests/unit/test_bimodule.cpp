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

#include <tri3/bimodule.hpp>
#include <tri3/error.hpp>
#include <tri3/generators.hpp>

using namespace tri3;

namespace {

BimoduleSpec z2_over_z2(std::shared_ptr<const FiniteRing> r) {
    return matrix_block_bimodule(r, r, MatrixCarrier{2, 1, 1, {{0, 0}}});
}

} // namespace

TEST_SUITE("bimodule") {

TEST_CASE("Z2 over Z2 is a faithful bimodule of size 2") {
    auto r = FiniteRing::build(ringspec::Zn{2});
    auto m = Bimodule::build(z2_over_z2(r));
    CHECK(m->size() == 2);
    CHECK(m->check_faithful(Side::Left).faithful);
    CHECK(m->check_faithful(Side::Right).faithful);
}

TEST_CASE("the strictly upper 2x2 entry is a bimodule over scalar rings") {
    auto s = FiniteRing::build(ringspec::DiagonalScalarRing{2, 2});
    auto m = Bimodule::build(matrix_block_bimodule(s, s, MatrixCarrier{2, 2, 2, {{0, 1}}}));
    CHECK(m->size() == 2);
    CHECK(m->check_faithful(Side::Left).faithful);
    CHECK(m->check_faithful(Side::Right).faithful);
}

TEST_CASE("column pairs are a faithful left M_2 module") {
    auto a1 = FiniteRing::build(ringspec::MatrixRing{2, 2});
    auto s = FiniteRing::build(ringspec::DiagonalScalarRing{2, 2});
    auto m = Bimodule::build(matrix_block_bimodule(a1, s, MatrixCarrier{2, 2, 2, {{0, 1}, {1, 1}}}));
    CHECK(m->size() == 4);
    CHECK(m->check_faithful(Side::Left).faithful);
}

TEST_CASE("a mutated action entry breaks an action axiom") {
    auto a1 = FiniteRing::build(ringspec::MatrixRing{2, 2});
    auto s = FiniteRing::build(ringspec::DiagonalScalarRing{2, 2});
    auto spec = matrix_block_bimodule(a1, s, MatrixCarrier{2, 2, 2, {{0, 1}, {1, 1}}});
    // E11 (index 1) acting on the column (1,0) (index 1) gives (1,0); force (0,1)
    spec.left_action[1 * spec.size + 1] = 2;
    CHECK_THROWS_AS(Bimodule::build(spec), AxiomViolation);
}

TEST_CASE("zero module is not faithful") {
    auto r = FiniteRing::build(ringspec::Zn{2});
    BimoduleSpec z;
    z.left = r;
    z.right = r;
    z.size = 1;
    z.add = {0};
    z.left_action = {0, 0};
    z.right_action = {0, 0};
    auto m = Bimodule::build(z);
    const auto v = m->check_faithful(Side::Left);
    CHECK_FALSE(v.faithful);
    REQUIRE(v.witness);
    CHECK(*v.witness == 1);
}

TEST_CASE("module element arithmetic checks its tags") {
    auto r = FiniteRing::build(ringspec::Zn{2});
    auto other = FiniteRing::build(ringspec::Zn{2});
    auto m = Bimodule::build(z2_over_z2(r));
    auto n = Bimodule::build(z2_over_z2(r));
    const auto one = m->element(1);
    CHECK((one + one) == m->element(0));
    CHECK((r->one_element() * one) == one);
    CHECK((one * r->one_element()) == one);
    CHECK_THROWS_AS(one + n->element(1), ModuleMismatch);
    CHECK_THROWS_AS(other->one_element() * one, RingMismatch);
    CHECK_THROWS_AS(m->element(2), InputError);
}

TEST_CASE("pairing checks rings and bilinearity") {
    auto r = FiniteRing::build(ringspec::Zn{2});
    auto m = Bimodule::build(z2_over_z2(r));
    auto p = Pairing::build(m, m, m, {0, 0, 0, 1});
    CHECK(p.apply(1, 1) == 1);
    CHECK(p.apply(0, 1) == 0);
    CHECK(p(m->element(1), m->element(1)) == m->element(1));
    CHECK_THROWS_AS(Pairing::build(m, m, m, {0, 1, 0, 1}), AxiomViolation);
    CHECK_THROWS_AS(Pairing::build(m, m, m, {0, 0, 0}), InputError);
    auto other = FiniteRing::build(ringspec::Zn{2});
    auto foreign = Bimodule::build(z2_over_z2(other));
    CHECK_THROWS_AS(Pairing::build(m, foreign, m, {0, 0, 0, 1}), ModuleMismatch);
}

TEST_CASE("smallest annihilator") {
    const auto w = smallest_annihilator(4, 0, 3, [](Index r, Index) { return r >= 2; });
    REQUIRE(w);
    CHECK(*w == 2);
    CHECK_FALSE(smallest_annihilator(4, 0, 3, [](Index r, Index m) { return r == 0 || m == 5; }));
}

}
