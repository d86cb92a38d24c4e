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
#include "idrep/int_types.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace idrep {

std::string_view to_string(Signedness s) noexcept {
    return s == Signedness::signed_int ? "signed" : "unsigned";
}

IntTypeSpec::IntTypeSpec(std::string name, unsigned bytes)
    : name_(std::move(name)), bytes_(bytes) {
    if (name_.empty()) {
        raise(errc::invalid_catalog, "integer type name must not be empty");
    }
    if (bytes_ < 1 || bytes_ > 8) {
        raise(errc::invalid_catalog, "integer type '" + name_ +
                                         "': byte width must be in [1, 8], got " +
                                         std::to_string(bytes_));
    }
}

std::int64_t IntTypeSpec::signed_min() const noexcept {
    if (bytes_ == 8) {
        return std::numeric_limits<std::int64_t>::min();
    }
    return -(std::int64_t{1} << (8 * bytes_ - 1));
}

std::int64_t IntTypeSpec::signed_max() const noexcept {
    if (bytes_ == 8) {
        return std::numeric_limits<std::int64_t>::max();
    }
    return (std::int64_t{1} << (8 * bytes_ - 1)) - 1;
}

value_t IntTypeSpec::unsigned_max() const noexcept {
    if (bytes_ == 8) {
        return std::numeric_limits<value_t>::max();
    }
    return (value_t{1} << (8 * bytes_)) - 1;
}

TypeCatalog::TypeCatalog(std::vector<IntTypeSpec> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        raise(errc::invalid_catalog, "type catalog must not be empty");
    }
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].bytes() <= entries_[i - 1].bytes()) {
            raise(errc::invalid_catalog,
                  "catalog byte widths must be strictly increasing: '" +
                      entries_[i - 1].name() + "' then '" + entries_[i].name() + "'");
        }
    }
}

const TypeCatalog& TypeCatalog::mysql_defaults() {
    static const TypeCatalog catalog(std::vector<IntTypeSpec>{
        {"TINYINT", 1},
        {"SMALLINT", 2},
        {"MEDIUMINT", 3},
        {"INT", 4},
        {"BIGINT", 8},
    });
    return catalog;
}

TypeCatalog TypeCatalog::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("catalog document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        raise(errc::invalid_catalog, "catalog document needs an 'entries' array");
    }
    std::vector<IntTypeSpec> entries;
    for (const auto& item : doc["entries"]) {
        if (!item.is_object() || !item.contains("name") || !item.contains("bytes") ||
            !item["name"].is_string() || !item["bytes"].is_number_unsigned()) {
            raise(errc::invalid_catalog,
                  "catalog entry needs a string 'name' and an unsigned 'bytes'");
        }
        entries.emplace_back(item["name"].get<std::string>(),
                             item["bytes"].get<unsigned>());
    }
    return TypeCatalog(std::move(entries));
}

TypeCatalog TypeCatalog::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        raise(errc::io_error, "cannot open catalog file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::optional<IntTypeSpec> TypeCatalog::find(std::string_view name) const {
    for (const auto& entry : entries_) {
        if (entry.name() == name) {
            return entry;
        }
    }
    return std::nullopt;
}

value_t max_decimal_value(unsigned digits) {
    if (digits < 1 || digits > max_decimal_digits) {
        raise(errc::invalid_width, "decimal width must be in [1, 19], got " +
                                       std::to_string(digits));
    }
    value_t v = 1;
    for (unsigned i = 0; i < digits; ++i) {
        v *= 10;
    }
    return v - 1;
}

bool fits(const IntTypeSpec& spec, value_t v, Signedness s) noexcept {
    if (s == Signedness::unsigned_int) {
        return v <= spec.unsigned_max();
    }
    return v <= static_cast<value_t>(spec.signed_max());
}

std::optional<IntTypeSpec> select_min_type(const TypeCatalog& catalog, value_t v,
                                           Signedness s) {
    for (const auto& entry : catalog.entries()) {
        if (fits(entry, v, s)) {
            return entry;
        }
    }
    return std::nullopt;
}

std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::value_out_of_range: return "value-out-of-range";
        case errc::invalid_width: return "invalid-width";
        case errc::parse_error: return "parse-error";
        case errc::invalid_schema: return "invalid-schema";
        case errc::invalid_catalog: return "invalid-catalog";
        case errc::invalid_id: return "invalid-id";
        case errc::unsupported_type: return "unsupported-type";
        case errc::no_fitting_type: return "no-fitting-type";
        case errc::representation_mismatch: return "representation-mismatch";
        case errc::run_count_mismatch: return "run-count-mismatch";
        case errc::zero_total_time: return "zero-total-time";
        case errc::overflow: return "overflow";
        case errc::empty_input: return "empty-input";
        case errc::io_error: return "io-error";
        case errc::usage: return "usage";
        case errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace idrep
