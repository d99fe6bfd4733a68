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

#include <tri3/digest.hpp>
#include <tri3/error.hpp>

namespace tri3 {

namespace {
constexpr std::uint64_t kPrime = 0x100000001b3ULL;
}

void Fnv1a::bytes(std::string_view s) {
    for (unsigned char c : s) {
        state_ ^= c;
        state_ *= kPrime;
    }
}

void Fnv1a::u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        state_ ^= (v >> (8 * i)) & 0xffU;
        state_ *= kPrime;
    }
}

void Fnv1a::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        state_ ^= (v >> (8 * i)) & 0xffU;
        state_ *= kPrime;
    }
}

void Fnv1a::u32s(std::span<const std::uint32_t> v) {
    for (auto x : v) u32(x);
}

std::string to_hex(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::uint64_t from_hex(std::string_view s) {
    if (s.size() != 16) throw InputError("hex digest must have 16 digits, got '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= static_cast<std::uint64_t>(c - 'a' + 10);
        else
            throw InputError("invalid hex digit in '" + std::string(s) + "'");
    }
    return v;
}

} // namespace tri3
