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

#include <tri3/example21.hpp>

#include <tri3/error.hpp>
#include <tri3/generators.hpp>

namespace tri3 {

namespace {

using Mat = std::vector<std::uint32_t>;

Mat mul6(const Mat& a, const Mat& b, std::uint32_t q) {
    Mat out(36, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < 6; ++k) acc += static_cast<std::uint64_t>(a[i * 6 + k]) * b[k * 6 + j];
            out[i * 6 + j] = static_cast<std::uint32_t>(acc % q);
        }
    return out;
}

bool is_zero(const Mat& m) {
    for (auto v : m)
        if (v) return false;
    return true;
}

// True when every nonzero entry (i, j) satisfies keep(i, j).
template <class Keep>
bool supported(const Mat& m, Keep keep) {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (m[i * 6 + j] && !keep(i, j)) return false;
    return true;
}

struct Blocks {
    std::vector<Index> b, m, c;
};

PartitionCheck run_partition(const TriRing3& t, const std::vector<Mat>& mats, int p, std::uint32_t q) {
    PartitionCheck pc;
    pc.p = p;
    Blocks blk;
    for (Index x = 0; x < t.size(); ++x) {
        const auto& m = mats[x];
        if (pc.lower_zero)
            for (int i = p; i < 6 && pc.lower_zero; ++i)
                for (int j = 0; j < p; ++j)
                    if (m[i * 6 + j]) {
                        pc.lower_zero = false;
                        pc.lower_witness = x;
                        break;
                    }
        if (supported(m, [p](int i, int j) { return i < p && j < p; })) blk.b.push_back(x);
        if (supported(m, [p](int i, int j) { return i < p && j >= p; })) blk.m.push_back(x);
        if (supported(m, [p](int i, int j) { return i >= p && j >= p; })) blk.c.push_back(x);
    }
    pc.b_size = blk.b.size();
    pc.m_size = blk.m.size();
    pc.c_size = blk.c.size();
    if (!pc.lower_zero) {
        pc.is_product = false;
        pc.note = "lower-left block is nonzero at element " + std::to_string(*pc.lower_witness);
        return pc;
    }
    const std::size_t prod = pc.b_size * pc.m_size * pc.c_size;
    pc.is_product = prod == t.size();
    if (!pc.is_product) {
        pc.note = "block triples number " + std::to_string(prod) + " but the ring has " + std::to_string(t.size()) +
                  " elements; the ring is a proper subring of the block triangular ring";
        return pc;
    }
    pc.checked_faithfulness = true;
    // The zero matrix is element 0 and lies first in every block list.
    auto left = smallest_annihilator(blk.b.size(), 0, blk.m.size(), [&](Index r, Index m) {
        return is_zero(mul6(mats[blk.b[r]], mats[blk.m[m]], q));
    });
    auto right = smallest_annihilator(blk.c.size(), 0, blk.m.size(), [&](Index s, Index m) {
        return is_zero(mul6(mats[blk.m[m]], mats[blk.c[s]], q));
    });
    pc.left_faithful = !left;
    pc.right_faithful = !right;
    if (left) pc.left_witness = blk.b[*left];
    if (right) pc.right_witness = blk.c[*right];
    return pc;
}

[[noreturn]] void contradiction(const std::string& what) {
    throw TheoremInvariantViolation("not-triangular check contradicts the expected outcome: " + what);
}

} // namespace

NotTriangularReport check_not_triangular_example21(const TriRing3& t) {
    const std::uint32_t q = t.r1().modulus();
    if (q < 2) throw InputError("not-triangular check needs the example21 preset ring");
    Limits probe = t.limits();
    probe.scan_cap = 0;
    if (preset_example21(q, probe)->hash() != t.hash())
        throw InputError("not-triangular check needs the example21 preset ring");

    std::vector<Mat> mats(t.size());
    for (Index x = 0; x < t.size(); ++x) mats[x] = example21_embed(t, x);

    NotTriangularReport r;
    r.modulus = q;
    for (int p = 1; p <= 5; ++p) r.partitions.push_back(run_partition(t, mats, p, q));

    const auto& p1 = r.partitions[0];
    const auto& p2 = r.partitions[1];
    const auto& p3 = r.partitions[2];
    const auto& p4 = r.partitions[3];
    const auto& p5 = r.partitions[4];
    if (p1.lower_zero) contradiction("(1+5) lower block should be nonzero");
    if (!p3.lower_zero || p3.is_product) contradiction("(3+3) should be block triangular but not a block product");
    if (!p5.lower_zero || p5.is_product) contradiction("(5+1) should be block triangular but not a block product");
    if (!p4.checked_faithfulness || p4.left_faithful) contradiction("(4+2) module should not be left faithful");
    if (!p4.right_faithful) contradiction("(4+2) module should be right faithful");
    if (!p2.checked_faithfulness || p2.right_faithful) contradiction("(2+4) module should not be right faithful");
    if (!p2.left_faithful) contradiction("(2+4) module should be left faithful");

    r.way1_not_faithful = true;
    r.way1_witness = *p4.left_witness;
    r.way1_witness_matrix = mats[r.way1_witness];
    r.way2_not_faithful = true;
    r.way2_witness = *p2.right_witness;
    r.way2_witness_matrix = mats[r.way2_witness];

    // Way 1: B with a 1 in position (1,4) and nothing outside rows 1-2 of
    // column 4. Way 2: C with a 1 in its position (1,4), i.e. (3,6) of A.
    const auto& w1 = r.way1_witness_matrix;
    if (w1[0 * 6 + 3] != 1 || !supported(w1, [](int i, int j) { return j == 3 && i < 2; }))
        contradiction("Way 1 witness does not have the displayed shape");
    const auto& w2 = r.way2_witness_matrix;
    if (w2[2 * 6 + 5] != 1 || !supported(w2, [](int i, int j) { return i == 2 && j == 5; }))
        contradiction("Way 2 witness does not have the displayed shape");

    r.not_triangular = true;
    for (const auto& pc : r.partitions)
        if (pc.lower_zero && pc.is_product && pc.left_faithful && pc.right_faithful) r.not_triangular = false;
    if (!r.not_triangular) contradiction("some partition yields a faithful triangular ring");
    return r;
}

} // namespace tri3
