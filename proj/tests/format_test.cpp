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
#include "idrep/format.hpp"

#include <doctest.h>

using namespace idrep;

TEST_CASE("fixed-point formatting") {
    CHECK(format_fixed(1.04465, 2) == "1.04");
    CHECK(format_fixed(23.735124826431, 6) == "23.735125");
    CHECK(format_fixed(23.735124826431, 12) == "23.735124826431");
    CHECK(format_percent(50.0) == "50.00");
    CHECK(format_percent(-10.0) == "-10.00");
}

TEST_CASE("csv fields are quoted only when needed") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("with,comma") == "\"with,comma\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("text table aligns columns") {
    TextTable t({"name", "bytes"}, {Align::left, Align::right});
    t.add_row({"CHAR(8)", "8"});
    t.add_row({"VARCHAR(8)", "9"});
    CHECK(t.str() ==
          "name        bytes\n"
          "CHAR(8)         8\n"
          "VARCHAR(8)      9\n");
}
