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
#include <string>
#include <string_view>
#include <vector>

namespace idrep {

std::string format_fixed(double value, int decimals);

/// Percentages are always printed with exactly two decimals.
inline std::string format_percent(double value) { return format_fixed(value, 2); }

std::string csv_field(std::string_view value);

enum class Align { left, right };

/// Column-aligned plain-text table, two spaces between columns.
class TextTable {
public:
    TextTable(std::vector<std::string> headers, std::vector<Align> aligns);

    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::string> headers_;
    std::vector<Align> aligns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace idrep
