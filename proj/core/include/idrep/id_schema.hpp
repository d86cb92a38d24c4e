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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idrep/error.hpp"
#include "idrep/int_types.hpp"

namespace idrep {

enum class FieldKind {
    coded,  ///< substring must match one of a fixed set of codes
    serial, ///< any digit string of the right width
};

/// One positional field of a digit-structured identifier.
struct DigitField {
    std::string name;
    unsigned width = 1;
    FieldKind kind = FieldKind::serial;
    /// code -> human label; keys are exactly `width` digits. Required for
    /// coded fields, empty for serials.
    std::map<std::string, std::string> codes;
};

struct Violation {
    std::string field; ///< empty when the whole id is at fault
    std::string reason;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool ok() const noexcept { return violations.empty(); }
};

struct IdComponent {
    std::string field;
    std::string digits;
    std::optional<std::string> label; ///< resolved for coded fields only
};

struct ParsedId {
    std::string raw;
    std::vector<IdComponent> components;
};

/// Unknown codes on coded fields are violations under `strict` and mere
/// warnings under `permissive` (real rosters may predate the schema).
enum class Strictness { strict, permissive };

/// Declarative schema for a fixed-width, all-digit identifier.
///
/// Total width is capped at 19 digits so every valid id packs losslessly
/// into the 64-bit value domain.
class IdSchema {
public:
    IdSchema(std::string name, std::vector<DigitField> fields);

    /// Schema document: {"name": ..., "fields": [{"name", "width", "kind",
    /// "codes"?}, ...]}. An optional "total_width" member, when present,
    /// must equal the sum of the field widths.
    static IdSchema from_json(std::string_view text);
    static IdSchema from_file(const std::filesystem::path& path);

    /// Schema with a single serial field covering the whole width.
    static IdSchema serial(std::string name, unsigned total_width);

    const std::string& name() const noexcept { return name_; }
    const std::vector<DigitField>& fields() const noexcept { return fields_; }
    unsigned total_width() const noexcept { return total_width_; }

    /// Checks width, digit-only content, and coded-field membership.
    /// Violations are data, not faults; this never throws on bad ids.
    ValidationReport validate(std::string_view id,
                              Strictness strictness = Strictness::strict) const;

    /// Splits a valid id into components with labels resolved.
    /// Throws errc::invalid_id when validate() is not ok.
    ParsedId parse(std::string_view id,
                   Strictness strictness = Strictness::strict) const;

    /// Decimal value of the digit string. Leading zeros are part of the
    /// id, not the value: pack("00000001") = 1.
    value_t pack(std::string_view id,
                 Strictness strictness = Strictness::strict) const;

    /// Fixed-width decimal rendering, zero-padded to total_width.
    /// Inverse of pack. Throws errc::value_out_of_range beyond the width.
    std::string unpack(value_t value) const;

    /// Minimal catalog type that can hold any id of this width.
    std::optional<IntTypeSpec> recommended_type(const TypeCatalog& catalog,
                                                Signedness s) const;

private:
    std::string name_;
    std::vector<DigitField> fields_;
    unsigned total_width_ = 0;
};

/// Free-function spelling of IdSchema::from_json.
IdSchema load_schema(std::string_view document);

} // namespace idrep
