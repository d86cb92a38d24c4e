/*
 * Copyright 2026 idrep project
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
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
#include <string_view>
#include <vector>

#include "idrep/error.hpp"

namespace idrep {

/// Unsigned value domain shared across the library. Identifiers of up to
/// 19 decimal digits and 64-bit type ranges all fit.
using value_t = std::uint64_t;

inline constexpr unsigned max_bit_width = 64;

/// Ordered sequence of binary digits, most significant first.
/// Length is 1..64; every element is 0 or 1.
class BitVector {
public:
    explicit BitVector(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters, e.g. "10100011".
    static BitVector parse(std::string_view text);

    unsigned size() const noexcept { return static_cast<unsigned>(bits_.size()); }

    /// Digit at `pos`, counted from the most significant end.
    std::uint8_t operator[](unsigned pos) const { return bits_.at(pos); }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::string str() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Positional value of the vector: sum of bit_i * 2^i over all positions.
/// Always in [0, 2^n - 1] for an n-bit vector.
value_t bits_to_value(const BitVector& b) noexcept;

/// Inverse of bits_to_value. The result has exactly `bit_count` digits,
/// leading zeros preserved.
BitVector value_to_bits(value_t value, unsigned bit_count);

} // namespace idrep
