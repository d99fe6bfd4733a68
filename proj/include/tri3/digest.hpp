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
#include <span>
#include <string>
#include <string_view>

namespace tri3 {

/// 64-bit FNV-1a. Integers are fed little-endian, so digests are identical
/// on every platform.
class Fnv1a {
public:
    void bytes(std::string_view s);
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void u32s(std::span<const std::uint32_t> v);

    std::uint64_t value() const noexcept { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

/// Lowercase, zero-padded 16-digit hex.
std::string to_hex(std::uint64_t v);

/// Parses the output of `to_hex`; throws InputError otherwise.
std::uint64_t from_hex(std::string_view s);

/// SplitMix64: state advances by 0x9E3779B97F4A7C15, output is mixed with
/// (x ^ x>>30) * 0xBF58476D1CE4E5B9, (x ^ x>>27) * 0x94D049BB133111EB,
/// x ^ x>>31. Fixed constants keep generated maps reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Value in [0, bound) by plain modulo reduction.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace tri3
