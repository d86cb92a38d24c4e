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
#include "idrep/storage_model.hpp"

namespace idrep {

std::string_view to_string(AccountingMode mode) noexcept {
    return mode == AccountingMode::actual_data ? "actual_data" : "declared_max";
}

CharStored char_stored(std::size_t declared_len, std::string_view data) {
    if (declared_len > fixed_char_max_len) {
        raise(errc::invalid_width, "CHAR length must be in [0, 255], got " +
                                       std::to_string(declared_len));
    }
    CharStored result;
    result.stored = std::string(data.substr(0, declared_len));
    result.stored.resize(declared_len, ' ');
    result.bytes = declared_len;
    return result;
}

std::size_t varchar_prefix_bytes(std::size_t declared_max) noexcept {
    return declared_max < 255 ? 1 : 2;
}

std::size_t varchar_stored(std::size_t declared_max, std::string_view data,
                           AccountingMode mode) {
    if (declared_max > var_char_max_len) {
        raise(errc::invalid_width, "VARCHAR length must be in [0, 65535], got " +
                                       std::to_string(declared_max));
    }
    const std::size_t prefix = varchar_prefix_bytes(declared_max);
    if (mode == AccountingMode::declared_max) {
        return declared_max + prefix;
    }
    return std::min(data.size(), declared_max) + prefix;
}

ColumnSpec ColumnSpec::fixed_char(std::size_t declared_len) {
    if (declared_len > fixed_char_max_len) {
        raise(errc::invalid_width, "CHAR length must be in [0, 255], got " +
                                       std::to_string(declared_len));
    }
    return ColumnSpec(Kind::fixed_char, declared_len, std::nullopt);
}

ColumnSpec ColumnSpec::var_char(std::size_t declared_max) {
    if (declared_max > var_char_max_len) {
        raise(errc::invalid_width, "VARCHAR length must be in [0, 65535], got " +
                                       std::to_string(declared_max));
    }
    return ColumnSpec(Kind::var_char, declared_max, std::nullopt);
}

ColumnSpec ColumnSpec::integer(IntTypeSpec spec) {
    return ColumnSpec(Kind::integer, 0, std::move(spec));
}

std::string ColumnSpec::label() const {
    switch (kind_) {
        case Kind::fixed_char:
            return "CHAR(" + std::to_string(declared_len_) + ")";
        case Kind::var_char:
            return "VARCHAR(" + std::to_string(declared_len_) + ")";
        case Kind::integer:
            return int_spec_->name();
    }
    return {};
}

std::size_t column_bytes(const ColumnSpec& col, std::string_view data,
                         AccountingMode mode) {
    switch (col.kind()) {
        case ColumnSpec::Kind::fixed_char:
            return char_stored(col.declared_len(), data).bytes;
        case ColumnSpec::Kind::var_char:
            return varchar_stored(col.declared_len(), data, mode);
        case ColumnSpec::Kind::integer:
            return col.int_spec().bytes();
    }
    return 0;
}

double space_efficiency(std::size_t baseline_bytes, std::size_t candidate_bytes) {
    if (baseline_bytes == 0) {
        raise(errc::value_out_of_range, "baseline byte count must be positive");
    }
    return (static_cast<double>(baseline_bytes) - static_cast<double>(candidate_bytes)) /
           static_cast<double>(baseline_bytes) * 100.0;
}

StorageReport compare_representations(unsigned digits, const TypeCatalog& catalog,
                                      Signedness s, AccountingMode mode) {
    const value_t max_value = max_decimal_value(digits);
    const std::string widest(digits, '9');

    const auto char_col = ColumnSpec::fixed_char(digits);
    const auto varchar_col = ColumnSpec::var_char(digits);
    const std::size_t baseline = column_bytes(varchar_col, widest, mode);

    StorageReport report;
    report.digits = digits;
    report.signedness = s;
    report.mode = mode;
    report.baseline_label = varchar_col.label();

    auto add_row = [&](const ColumnSpec& col) {
        const std::size_t bytes = column_bytes(col, widest, mode);
        report.rows.push_back({col.label(), bytes, space_efficiency(baseline, bytes)});
    };

    add_row(char_col);
    add_row(varchar_col);
    for (const auto& entry : catalog.entries()) {
        if (fits(entry, max_value, s)) {
            add_row(ColumnSpec::integer(entry));
        }
    }
    return report;
}

} // namespace idrep
