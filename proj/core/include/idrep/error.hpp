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

#include <stdexcept>
#include <string>
#include <string_view>

namespace idrep {

enum class errc {
    value_out_of_range,
    invalid_width,
    parse_error,
    invalid_schema,
    invalid_catalog,
    invalid_id,
    unsupported_type,
    no_fitting_type,
    representation_mismatch,
    run_count_mismatch,
    zero_total_time,
    overflow,
    empty_input,
    io_error,
    usage,
    internal,
};

std::string_view to_string(errc code) noexcept;

/// Single exception type for all domain errors; `code()` tells callers
/// which contract was violated.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace idrep
