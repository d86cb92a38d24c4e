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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idrep/bit_vector.hpp"
#include "idrep/error.hpp"

namespace idrep {

inline constexpr unsigned max_decimal_digits = 19;

enum class Signedness { signed_int, unsigned_int };

std::string_view to_string(Signedness s) noexcept;

/// A named integer column type. Ranges are always derived from the byte
/// width, never stored, so they cannot drift out of sync:
///   signed:   [-2^(8b-1), 2^(8b-1) - 1]
///   unsigned: [0, 2^8b - 1]
class IntTypeSpec {
public:
    /// `bytes` must be in [1, 8]; wider types would overflow the 64-bit
    /// value domain.
    IntTypeSpec(std::string name, unsigned bytes);

    const std::string& name() const noexcept { return name_; }
    unsigned bytes() const noexcept { return bytes_; }

    std::int64_t signed_min() const noexcept;
    std::int64_t signed_max() const noexcept;
    value_t unsigned_min() const noexcept { return 0; }
    value_t unsigned_max() const noexcept;

    friend bool operator==(const IntTypeSpec&, const IntTypeSpec&) = default;

private:
    std::string name_;
    unsigned bytes_;
};

/// Ordered set of integer types, byte widths strictly increasing.
class TypeCatalog {
public:
    explicit TypeCatalog(std::vector<IntTypeSpec> entries);

    /// The stock MySQL integer types:
    /// TINYINT 1, SMALLINT 2, MEDIUMINT 3, INT 4, BIGINT 8.
    static const TypeCatalog& mysql_defaults();

    /// Loads a catalog document: {"entries": [{"name": ..., "bytes": ...}, ...]}.
    static TypeCatalog from_json(std::string_view text);
    static TypeCatalog from_file(const std::filesystem::path& path);

    const std::vector<IntTypeSpec>& entries() const noexcept { return entries_; }
    std::optional<IntTypeSpec> find(std::string_view name) const;

private:
    std::vector<IntTypeSpec> entries_;
};

/// 10^digits - 1, the largest value a fixed number of decimal digits can
/// spell. `digits` must be in [1, 19].
value_t max_decimal_value(unsigned digits);

/// True iff `v` lies within the chosen range of `spec`. The value domain
/// is non-negative, so the signed lower bound never comes into play.
bool fits(const IntTypeSpec& spec, value_t v, Signedness s) noexcept;

/// First (smallest-byte) catalog entry whose range holds `v`; nullopt when
/// none fits. Ties on byte width resolve to the earlier entry.
std::optional<IntTypeSpec> select_min_type(const TypeCatalog& catalog, value_t v,
                                           Signedness s);

} // namespace idrep
