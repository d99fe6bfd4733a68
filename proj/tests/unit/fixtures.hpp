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

#include <memory>

#include <tri3/generators.hpp>
#include <tri3/ring_facts.hpp>
#include <tri3/tri_ring.hpp>

namespace fixtures {

using namespace tri3;

struct Preset {
    std::shared_ptr<const TriRing3> t;
    RingFacts facts;
};

inline const Preset& ut3_z2() {
    static const Preset p = [] {
        auto t = preset_ut3(2);
        return Preset{t, RingFacts::compute(*t)};
    }();
    return p;
}

inline const Preset& ut3_z3() {
    static const Preset p = [] {
        auto t = preset_ut3(3);
        return Preset{t, RingFacts::compute(*t)};
    }();
    return p;
}

inline const Preset& ex21_z2() {
    static const Preset p = [] {
        auto t = preset_example21(2);
        return Preset{t, RingFacts::compute(*t)};
    }();
    return p;
}

/// R1 = Z2 x Z2 (index a + 2b), R2 = R3 = Z2, M12 = M13 = Z2^2 with R1
/// acting componentwise and Z2 by scalars, M23 = Z2, pairing (x, y) c =
/// (xc, yc). Central elements force r11 = (r, r), so Q1 Z(T) Q1 has 2
/// elements while Z(T1) = R1 has 4.
inline std::shared_ptr<const FiniteRing> z2xz2() {
    ringspec::ExplicitTables s;
    s.add.assign(4, std::vector<Index>(4));
    s.mul.assign(4, std::vector<Index>(4));
    for (Index x = 0; x < 4; ++x)
        for (Index y = 0; y < 4; ++y) {
            s.add[x][y] = x ^ y;
            s.mul[x][y] = x & y;
        }
    s.zero = 0;
    s.one = 3;
    return FiniteRing::build(s);
}

inline BimoduleSpec pair_module(std::shared_ptr<const FiniteRing> r, std::shared_ptr<const FiniteRing> z2) {
    BimoduleSpec m;
    m.left = r;
    m.right = z2;
    m.size = 4;
    m.zero = 0;
    m.add.resize(16);
    m.left_action.resize(16);
    m.right_action.resize(8);
    for (Index x = 0; x < 4; ++x) {
        for (Index y = 0; y < 4; ++y) {
            m.add[x * 4 + y] = x ^ y;
            m.left_action[x * 4 + y] = x & y;
        }
        for (Index c = 0; c < 2; ++c) m.right_action[x * 2 + c] = c ? x : 0;
    }
    return m;
}

inline TriRingConfig assumption_failure_config() {
    TriRingConfig c;
    c.r1 = z2xz2();
    c.r2 = FiniteRing::build(ringspec::Zn{2});
    c.r3 = FiniteRing::build(ringspec::Zn{2});
    c.m12 = Bimodule::build(pair_module(c.r1, c.r2));
    c.m13 = Bimodule::build(pair_module(c.r1, c.r3));
    c.m23 = Bimodule::build(matrix_block_bimodule(c.r2, c.r3, MatrixCarrier{2, 1, 1, {{0, 0}}}));
    c.pairing.resize(8);
    for (Index x = 0; x < 4; ++x)
        for (Index w = 0; w < 2; ++w) c.pairing[x * 2 + w] = w ? x : 0;
    return c;
}

inline const Preset& assumption_failure() {
    static const Preset p = [] {
        auto t = TriRing3::build(assumption_failure_config());
        return Preset{t, RingFacts::compute(*t)};
    }();
    return p;
}

/// Element of T with the given components.
inline Index elem(const TriRing3& t, Index r11, Index m12, Index m13, Index r22, Index m23, Index r33) {
    return t.encode({r11, m12, m13, r22, m23, r33});
}

} // namespace fixtures
