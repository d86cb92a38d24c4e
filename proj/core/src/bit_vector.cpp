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
#include "idrep/bit_vector.hpp"

namespace idrep {

namespace {

void check_width(std::size_t n) {
    if (n < 1 || n > max_bit_width) {
        raise(errc::invalid_width,
              "bit width must be in [1, 64], got " + std::to_string(n));
    }
}

} // namespace

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    check_width(bits_.size());
    for (std::uint8_t b : bits_) {
        if (b > 1) {
            raise(errc::value_out_of_range,
                  "bit digit must be 0 or 1, got " + std::to_string(b));
        }
    }
}

BitVector BitVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            raise(errc::parse_error,
                  std::string("expected binary digit, got '") + c + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitVector(std::move(bits));
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

value_t bits_to_value(const BitVector& b) noexcept {
    // Horner form of the positional sum: each digit shifts the running
    // value one binary place.
    value_t v = 0;
    for (std::uint8_t bit : b.bits()) {
        v = (v << 1) | bit;
    }
    return v;
}

BitVector value_to_bits(value_t value, unsigned bit_count) {
    check_width(bit_count);
    if (bit_count < max_bit_width && value > ((value_t{1} << bit_count) - 1)) {
        raise(errc::value_out_of_range,
              std::to_string(value) + " does not fit in " +
                  std::to_string(bit_count) + " bits");
    }
    std::vector<std::uint8_t> bits(bit_count);
    for (unsigned i = 0; i < bit_count; ++i) {
        bits[bit_count - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1);
    }
    return BitVector(std::move(bits));
}

} // namespace idrep
