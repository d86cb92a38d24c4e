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
#include "idrep/id_schema.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace idrep {

namespace {

bool all_digits(std::string_view text) {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) {
               return std::isdigit(c) != 0;
           });
}

} // namespace

IdSchema::IdSchema(std::string name, std::vector<DigitField> fields)
    : name_(std::move(name)), fields_(std::move(fields)) {
    if (fields_.empty()) {
        raise(errc::invalid_schema, "schema '" + name_ + "' has no fields");
    }
    std::unordered_set<std::string> seen;
    for (const auto& field : fields_) {
        if (field.name.empty()) {
            raise(errc::invalid_schema, "schema '" + name_ + "': field name empty");
        }
        if (!seen.insert(field.name).second) {
            raise(errc::invalid_schema,
                  "schema '" + name_ + "': duplicate field name '" + field.name + "'");
        }
        if (field.width < 1) {
            raise(errc::invalid_schema,
                  "field '" + field.name + "': width must be at least 1");
        }
        if (field.kind == FieldKind::coded) {
            if (field.codes.empty()) {
                raise(errc::invalid_schema,
                      "coded field '" + field.name + "' declares no codes");
            }
            for (const auto& [code, label] : field.codes) {
                if (code.size() != field.width || !all_digits(code)) {
                    raise(errc::invalid_schema, "field '" + field.name + "': code '" +
                                                    code + "' is not a " +
                                                    std::to_string(field.width) +
                                                    "-digit string");
                }
                (void)label;
            }
        } else if (!field.codes.empty()) {
            raise(errc::invalid_schema,
                  "serial field '" + field.name + "' must not declare codes");
        }
        total_width_ += field.width;
    }
    if (total_width_ > max_decimal_digits) {
        raise(errc::invalid_schema,
              "schema '" + name_ + "': total width " + std::to_string(total_width_) +
                  " exceeds the packable maximum of 19 digits");
    }
}

IdSchema IdSchema::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("schema document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
        !doc.contains("fields") || !doc["fields"].is_array()) {
        raise(errc::parse_error,
              "schema document needs a string 'name' and a 'fields' array");
    }
    std::vector<DigitField> fields;
    for (const auto& item : doc["fields"]) {
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string() ||
            !item.contains("width") || !item["width"].is_number_unsigned() ||
            !item.contains("kind") || !item["kind"].is_string()) {
            raise(errc::parse_error,
                  "schema field needs 'name' (string), 'width' (unsigned), "
                  "'kind' (string)");
        }
        DigitField field;
        field.name = item["name"].get<std::string>();
        field.width = item["width"].get<unsigned>();
        const auto kind = item["kind"].get<std::string>();
        if (kind == "enum") {
            field.kind = FieldKind::coded;
        } else if (kind == "serial") {
            field.kind = FieldKind::serial;
        } else {
            raise(errc::parse_error,
                  "field '" + field.name + "': kind must be 'enum' or 'serial'");
        }
        if (item.contains("codes")) {
            if (!item["codes"].is_object()) {
                raise(errc::parse_error,
                      "field '" + field.name + "': 'codes' must be an object");
            }
            for (const auto& [code, label] : item["codes"].items()) {
                if (!label.is_string()) {
                    raise(errc::parse_error, "field '" + field.name + "': label for '" +
                                                 code + "' must be a string");
                }
                field.codes.emplace(code, label.get<std::string>());
            }
        }
        fields.push_back(std::move(field));
    }
    IdSchema schema(doc["name"].get<std::string>(), std::move(fields));
    if (doc.contains("total_width")) {
        if (!doc["total_width"].is_number_unsigned() ||
            doc["total_width"].get<unsigned>() != schema.total_width()) {
            raise(errc::invalid_schema,
                  "declared total_width does not match the sum of field widths (" +
                      std::to_string(schema.total_width()) + ")");
        }
    }
    return schema;
}

IdSchema IdSchema::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        raise(errc::io_error, "cannot open schema file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

IdSchema IdSchema::serial(std::string name, unsigned total_width) {
    std::vector<DigitField> fields;
    fields.push_back(DigitField{"value", total_width, FieldKind::serial, {}});
    return IdSchema(std::move(name), std::move(fields));
}

ValidationReport IdSchema::validate(std::string_view id, Strictness strictness) const {
    ValidationReport report;
    if (id.size() != total_width_) {
        report.violations.push_back(
            {"", "length " + std::to_string(id.size()) + " != " +
                     std::to_string(total_width_)});
        return report;
    }
    std::size_t offset = 0;
    for (const auto& field : fields_) {
        const std::string_view part = id.substr(offset, field.width);
        offset += field.width;
        if (!all_digits(part)) {
            report.violations.push_back(
                {field.name, "'" + std::string(part) + "' is not all digits"});
            continue;
        }
        if (field.kind == FieldKind::coded && !field.codes.contains(std::string(part))) {
            Violation v{field.name, "unknown code '" + std::string(part) + "'"};
            if (strictness == Strictness::permissive) {
                report.warnings.push_back(std::move(v));
            } else {
                report.violations.push_back(std::move(v));
            }
        }
    }
    return report;
}

ParsedId IdSchema::parse(std::string_view id, Strictness strictness) const {
    const auto report = validate(id, strictness);
    if (!report.ok()) {
        std::string detail;
        for (const auto& v : report.violations) {
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += v.field.empty() ? v.reason : v.field + ": " + v.reason;
        }
        raise(errc::invalid_id, "'" + std::string(id) + "': " + detail);
    }
    ParsedId parsed;
    parsed.raw = std::string(id);
    std::size_t offset = 0;
    for (const auto& field : fields_) {
        IdComponent component;
        component.field = field.name;
        component.digits = std::string(id.substr(offset, field.width));
        offset += field.width;
        if (field.kind == FieldKind::coded) {
            if (auto it = field.codes.find(component.digits); it != field.codes.end()) {
                component.label = it->second;
            }
        }
        parsed.components.push_back(std::move(component));
    }
    return parsed;
}

value_t IdSchema::pack(std::string_view id, Strictness strictness) const {
    const auto report = validate(id, strictness);
    if (!report.ok()) {
        raise(errc::invalid_id, "'" + std::string(id) + "': " +
                                    (report.violations.front().field.empty()
                                         ? report.violations.front().reason
                                         : report.violations.front().field + ": " +
                                               report.violations.front().reason));
    }
    value_t v = 0;
    const auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), v);
    if (ec != std::errc{} || ptr != id.data() + id.size()) {
        raise(errc::internal, "digit string failed to convert: '" + std::string(id) + "'");
    }
    return v;
}

std::string IdSchema::unpack(value_t value) const {
    if (value > max_decimal_value(total_width_)) {
        raise(errc::value_out_of_range,
              std::to_string(value) + " does not fit in " +
                  std::to_string(total_width_) + " digits");
    }
    char buf[max_decimal_digits + 1];
    std::snprintf(buf, sizeof(buf), "%0*llu", static_cast<int>(total_width_),
                  static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::optional<IntTypeSpec> IdSchema::recommended_type(const TypeCatalog& catalog,
                                                      Signedness s) const {
    return select_min_type(catalog, max_decimal_value(total_width_), s);
}

IdSchema load_schema(std::string_view document) { return IdSchema::from_json(document); }

} // namespace idrep
