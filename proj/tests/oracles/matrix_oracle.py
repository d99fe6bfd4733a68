#!/usr/bin/env python3
# Copyright 2026 The tri3 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Independent brute-force oracle over explicit integer matrices (ut3 and
# the 6x6 block ring). Values printed here are frozen into the C++ tests.
import itertools

import numpy as np


def ut3(n):
    out = []
    for r11, m12, m13, r22, m23, r33 in itertools.product(range(n), repeat=6):
        out.append([[r11, m12, m13], [0, r22, m23], [0, 0, r33]])
    return np.array(out, dtype=np.int64)


def ex21(n):
    out = []
    for a11, a12, a21, a22, a14, a24, a16, a26, a, a36, b in itertools.product(range(n), repeat=11):
        out.append([[a11, a12, 0, a14, 0, a16],
                    [a21, a22, 0, a24, 0, a26],
                    [0, 0, a, 0, 0, a36],
                    [0, 0, 0, a, 0, 0],
                    [0, 0, 0, 0, b, 0],
                    [0, 0, 0, 0, 0, b]])
    return np.array(out, dtype=np.int64)


def ut3_little_endian(n):
    # r11 least significant, then m12, m13, r22, m23, r33.
    out = []
    for r33, m23, r22, m13, m12, r11 in itertools.product(range(n), repeat=6):
        out.append([[r11, m12, m13], [0, r22, m23], [0, 0, r33]])
    return np.array(out, dtype=np.int64)


def index_of(elems, n):
    return {bytes(e.reshape(-1).astype(np.uint8)): i for i, e in enumerate(elems)}


def mld_scan(name, elems, n, phi):
    # First violating (x, y) with x outer, y inner, and the violation count.
    idx = index_of(elems, n)
    key = lambda m: idx[bytes((m % n).reshape(-1).astype(np.uint8))]
    images = [elems[phi(i, elems[i])] for i in range(len(elems))]
    first, count = None, 0
    for x in range(len(elems)):
        for y in range(len(elems)):
            a, b = elems[x], elems[y]
            br = (a @ b - b @ a) % n
            lhs = images[key(br)]
            pa, pb = images[x], images[y]
            rhs = ((pa @ b - b @ pa) + (a @ pb - pb @ a)) % n
            if (lhs != rhs).any():
                count += 1
                if first is None:
                    first = (x, y)
    print(f"{name}: first={first} violations={count}")


def report(name, elems, n):
    N = len(elems)
    comm = set()
    central = np.ones(N, dtype=bool)
    for i in range(N):
        d = (np.einsum("ij,njk->nik", elems[i], elems) - np.einsum("nij,jk->nik", elems, elems[i])) % n
        comm.update(map(bytes, d.reshape(N, -1).astype(np.uint8)))
        central[i] = not d.any()
    distinct = len(set(map(bytes, elems.reshape(N, -1).astype(np.uint8))))
    print(f"{name}: size={distinct} commutators={len(comm)} center={int(central.sum())}")
    return elems[central]


if __name__ == "__main__":
    report("ut3/Z2", ut3(2), 2)
    report("ut3/Z3", ut3(3), 3)
    center = report("ex21/Z2", ex21(2), 2)
    print("ex21/Z2 center diagonals:", sorted(tuple(int(z[i][i]) for i in range(6)) for z in center))
    x = np.zeros((6, 6), dtype=np.int64)
    x[0][3] = 1
    y = np.zeros((6, 6), dtype=np.int64)
    y[2][5] = 1
    p = (x @ y) % 2
    e = ut3_little_endian(2)
    idx = index_of(e, 2)
    eye = idx[bytes(np.eye(3, dtype=np.uint8).reshape(-1))]
    mld_scan("ut3/Z2 squaring", e, 2, lambda i, m: idx[bytes(((m @ m) % 2).reshape(-1).astype(np.uint8))])
    mld_scan("ut3/Z2 constant_I", e, 2, lambda i, m: eye)
    mld_scan("ut3/Z2 identity", e, 2, lambda i, m: i)
    print("ut3/Z2 identity index", eye)
    print("ex21 pairing (1,0)x1 -> M13 column", (int(p[0][5]), int(p[1][5])))
