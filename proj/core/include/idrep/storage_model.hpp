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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idrep/error.hpp"
#include "idrep/int_types.hpp"

namespace idrep {

/// How variable-width columns are priced: by the data actually stored, or
/// by the declared maximum. Single-byte charset throughout; one byte per
/// character.
enum class AccountingMode { actual_data, declared_max };

std::string_view to_string(AccountingMode mode) noexcept;

inline constexpr std::size_t fixed_char_max_len = 255;
inline constexpr std::size_t var_char_max_len = 65535;

struct CharStored {
    std::string stored;
    std::size_t bytes = 0;
};

/// Fixed-width storage: data truncated to `declared_len`, right-padded
/// with spaces. Cost is always `declared_len`, independent of the data.
CharStored char_stored(std::size_t declared_len, std::string_view data);

/// Length prefix of a variable-width column: 1 byte when the declared
/// maximum is below 255, 2 bytes from 255 up.
std::size_t varchar_prefix_bytes(std::size_t declared_max) noexcept;

/// Variable-width storage cost. Data beyond the declared maximum is
/// truncated. actual_data prices the stored length, declared_max prices
/// the declared width; the length prefix is charged either way.
std::size_t varchar_stored(std::size_t declared_max, std::string_view data,
                           AccountingMode mode);

/// A column's storage kind: CHAR(n), VARCHAR(n), or a catalog integer type.
class ColumnSpec {
public:
    enum class Kind { fixed_char, var_char, integer };

    static ColumnSpec fixed_char(std::size_t declared_len);
    static ColumnSpec var_char(std::size_t declared_max);
    static ColumnSpec integer(IntTypeSpec spec);

    Kind kind() const noexcept { return kind_; }
    std::size_t declared_len() const noexcept { return declared_len_; }
    const IntTypeSpec& int_spec() const { return *int_spec_; }

    /// Display label: "CHAR(8)", "VARCHAR(10)", or the type name.
    std::string label() const;

private:
    ColumnSpec(Kind kind, std::size_t declared_len, std::optional<IntTypeSpec> spec)
        : kind_(kind), declared_len_(declared_len), int_spec_(std::move(spec)) {}

    Kind kind_;
    std::size_t declared_len_;
    std::optional<IntTypeSpec> int_spec_;
};

/// Payload bytes of one column value. Integer columns ignore the data.
std::size_t column_bytes(const ColumnSpec& col, std::string_view data,
                         AccountingMode mode);

/// (baseline - candidate) / baseline * 100. Positive means the candidate
/// is smaller. Always < 100 for byte costs >= 1.
double space_efficiency(std::size_t baseline_bytes, std::size_t candidate_bytes);

struct StorageRow {
    std::string label;
    std::size_t bytes = 0;
    double efficiency_percent = 0.0; ///< vs the report's baseline row
};

struct StorageReport {
    unsigned digits = 0;
    Signedness signedness = Signedness::signed_int;
    AccountingMode mode = AccountingMode::actual_data;
    std::string baseline_label;
    std::vector<StorageRow> rows;
};

/// Byte comparison of every representation that can hold a `digits`-digit
/// identifier: CHAR(digits), VARCHAR(digits), and each fitting catalog
/// type, with efficiency measured against the VARCHAR row.
StorageReport compare_representations(unsigned digits, const TypeCatalog& catalog,
                                      Signedness s, AccountingMode mode);

} // namespace idrep
