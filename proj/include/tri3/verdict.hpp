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

#include <cstdint>
#include <string>
#include <vector>

#include <tri3/finite_ring.hpp>

namespace tri3 {

/// Outcome of an exhaustive check. Witnesses are input tuples in canonical
/// scan order, capped; `violations` counts all of them.
struct Verdict {
    std::string property;
    bool holds = true;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::vector<Index>> witnesses;

    void fail(std::vector<Index> w, std::size_t cap) {
        holds = false;
        ++violations;
        if (witnesses.size() < cap) witnesses.push_back(std::move(w));
    }
};

using MapVerdict = Verdict;

enum class Exec { Parallel, Serial };

} // namespace tri3
