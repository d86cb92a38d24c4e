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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idrep/error.hpp"
#include "idrep/int_types.hpp"
#include "idrep/storage_model.hpp"

namespace idrep {

/// CREATE TABLE subset: char(n), varchar(n), the catalog integer types,
/// and date. Anything else is an unsupported-type error, not a silent skip.

struct DdlColumn {
    enum class TypeClass { fixed_char, var_char, integer, date };

    std::string name;
    TypeClass type_class = TypeClass::fixed_char;
    std::size_t declared_len = 0; ///< char/varchar only
    std::optional<IntTypeSpec> int_spec;

    std::string type_label() const;
    ColumnSpec to_column_spec() const; ///< date columns have no storage model here
};

struct DdlTable {
    std::string name;
    std::vector<DdlColumn> columns;

    const DdlColumn* find_column(std::string_view name) const;
};

/// Parses `CREATE TABLE <ident> ( <ident> <type>[(n)] [, ...] ) [;]`.
/// Keywords are case-insensitive, whitespace free-form. Syntax errors
/// carry line:column positions.
DdlTable parse_ddl(std::string_view text,
                   const TypeCatalog& catalog = TypeCatalog::mysql_defaults());

/// Canonical rendering; parse_ddl(to_ddl(t)) reproduces t exactly.
std::string to_ddl(const DdlTable& table);

/// A character column whose sampled values were all-digit and of one
/// common width.
struct NumericCandidate {
    std::string column;
    unsigned observed_width = 0;
    std::size_t sample_count = 0;
    bool has_leading_zero = false;
};

/// Per-column sample values, e.g. parsed from a CSV with a header row.
using SampleSet = std::map<std::string, std::vector<std::string>>;

/// Scans samples of the table's character columns. A column qualifies iff
/// it has at least `min_samples` values and they are all non-empty,
/// all-digit, and share one width of at most 19. Order of samples does
/// not matter.
std::vector<NumericCandidate> detect_numeric_columns(const DdlTable& table,
                                                     const SampleSet& samples,
                                                     std::size_t min_samples = 1);

struct Recommendation {
    std::string column;
    unsigned observed_width = 0;
    std::string current_type;
    std::size_t current_bytes = 0;
    IntTypeSpec proposed_type;
    std::size_t proposed_bytes = 0;
    double efficiency_percent = 0.0;
    AccountingMode mode = AccountingMode::actual_data;
    std::vector<std::string> warnings;
};

/// Prices the declared column against the minimal integer type that holds
/// every `observed_width`-digit value. Throws errc::no_fitting_type when
/// the catalog has no wide-enough entry. Candidates with leading-zero
/// samples get a warning: integer storage drops the zeros unless ids are
/// rendered back at fixed width.
Recommendation recommend(const DdlTable& table, const NumericCandidate& candidate,
                         const TypeCatalog& catalog, Signedness s,
                         AccountingMode mode);

} // namespace idrep
