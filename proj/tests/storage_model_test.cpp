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

#include <random>

#include <doctest.h>

#include "idrep/format.hpp"

using namespace idrep;

TEST_CASE("fixed-width storage pads, truncates, and always costs the width") {
    auto r = char_stored(4, "");
    CHECK(r.stored == "    ");
    CHECK(r.bytes == 4);

    r = char_stored(4, "ab");
    CHECK(r.stored == "ab  ");
    CHECK(r.bytes == 4);

    r = char_stored(4, "abcd");
    CHECK(r.stored == "abcd");
    CHECK(r.bytes == 4);

    r = char_stored(4, "abcdefgh");
    CHECK(r.stored == "abcd");
    CHECK(r.bytes == 4);

    CHECK(char_stored(0, "xyz").bytes == 0);
    CHECK_THROWS_AS(char_stored(256, "x"), error);

    std::mt19937_64 rng(7005);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string data(rng() % 40, static_cast<char>('a' + rng() % 26));
        CHECK(char_stored(17, data).bytes == 17);
    }
}

TEST_CASE("variable-width storage charges data plus the length prefix") {
    CHECK(varchar_stored(4, "", AccountingMode::actual_data) == 1);
    CHECK(varchar_stored(4, "ab", AccountingMode::actual_data) == 3);
    CHECK(varchar_stored(4, "abcd", AccountingMode::actual_data) == 5);
    CHECK(varchar_stored(4, "abcdefgh", AccountingMode::actual_data) == 5);

    CHECK(varchar_stored(10, "99999999", AccountingMode::declared_max) == 11);
    CHECK(varchar_stored(10, "99999999", AccountingMode::actual_data) == 9);

    CHECK_THROWS_AS(varchar_stored(65536, "x", AccountingMode::actual_data), error);
}

TEST_CASE("length prefix boundary sits at a declared maximum of 255") {
    CHECK(varchar_prefix_bytes(254) == 1);
    CHECK(varchar_prefix_bytes(255) == 2);
    CHECK(varchar_prefix_bytes(256) == 2);

    CHECK(varchar_stored(254, "ab", AccountingMode::actual_data) == 3);
    CHECK(varchar_stored(255, "ab", AccountingMode::actual_data) == 4);
    CHECK(varchar_stored(256, "ab", AccountingMode::actual_data) == 4);
}

TEST_CASE("varchar cost bounds") {
    std::mt19937_64 rng(7006);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t declared = rng() % 300;
        const std::string data(rng() % 350, 'x');
        const std::size_t prefix = varchar_prefix_bytes(declared);
        const std::size_t actual =
            varchar_stored(declared, data, AccountingMode::actual_data);
        CHECK(actual >= prefix);
        CHECK(actual <= declared + prefix);
        // declared_max pricing never looks at the data
        CHECK(varchar_stored(declared, data, AccountingMode::declared_max) ==
              declared + prefix);
    }
}

TEST_CASE("column_bytes dispatches per storage kind") {
    const auto& catalog = TypeCatalog::mysql_defaults();
    CHECK(column_bytes(ColumnSpec::fixed_char(8), "99999999",
                       AccountingMode::actual_data) == 8);
    CHECK(column_bytes(ColumnSpec::var_char(8), "99999999",
                       AccountingMode::actual_data) == 9);
    CHECK(column_bytes(ColumnSpec::integer(*catalog.find("INT")), "",
                       AccountingMode::actual_data) == 4);
    CHECK(column_bytes(ColumnSpec::integer(*catalog.find("BIGINT")), "ignored",
                       AccountingMode::declared_max) == 8);
}

TEST_CASE("space_efficiency percentages") {
    CHECK(format_percent(space_efficiency(8, 4)) == "50.00");
    CHECK(format_percent(space_efficiency(9, 4)) == "55.56");
    CHECK(format_percent(space_efficiency(11, 4)) == "63.64");
    CHECK(space_efficiency(7, 7) == 0.0);
    CHECK_THROWS_AS(space_efficiency(0, 1), error);

    // strictly decreasing in the candidate cost
    double previous = space_efficiency(16, 1);
    for (std::size_t candidate = 2; candidate <= 32; ++candidate) {
        const double now = space_efficiency(16, candidate);
        CHECK(now < previous);
        previous = now;
    }
}

TEST_CASE("representation comparison for 8 digits") {
    const auto report =
        compare_representations(8, TypeCatalog::mysql_defaults(),
                                Signedness::signed_int, AccountingMode::actual_data);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.baseline_label == "VARCHAR(8)");

    CHECK(report.rows[0].label == "CHAR(8)");
    CHECK(report.rows[0].bytes == 8);
    CHECK(report.rows[1].label == "VARCHAR(8)");
    CHECK(report.rows[1].bytes == 9);
    CHECK(report.rows[2].label == "INT");
    CHECK(report.rows[2].bytes == 4);
    CHECK(report.rows[3].label == "BIGINT");
    CHECK(report.rows[3].bytes == 8);

    CHECK(report.rows[1].efficiency_percent == 0.0);
    CHECK(format_percent(report.rows[2].efficiency_percent) == "55.56");
}

TEST_CASE("representation comparison for 1 digit") {
    const auto report =
        compare_representations(1, TypeCatalog::mysql_defaults(),
                                Signedness::signed_int, AccountingMode::actual_data);
    CHECK(report.rows[0].label == "CHAR(1)");
    CHECK(report.rows[0].bytes == 1);
    CHECK(report.rows[1].label == "VARCHAR(1)");
    CHECK(report.rows[1].bytes == 2);
    CHECK(report.rows[2].label == "TINYINT");
    CHECK(report.rows[2].bytes == 1);
}

TEST_CASE("representation comparison matches a brute-force recomputation") {
    // Oracle: re-derive every row from the storage rules alone.
    const auto& catalog = TypeCatalog::mysql_defaults();
    for (unsigned digits = 1; digits <= 19; ++digits) {
        for (const auto s : {Signedness::signed_int, Signedness::unsigned_int}) {
            for (const auto mode :
                 {AccountingMode::actual_data, AccountingMode::declared_max}) {
                const auto report = compare_representations(digits, catalog, s, mode);

                const std::size_t varchar_bytes = digits + (digits < 255 ? 1 : 2);
                REQUIRE(report.rows.size() >= 2);
                CHECK(report.rows[0].bytes == digits);
                CHECK(report.rows[1].bytes == varchar_bytes);

                value_t widest = 1;
                for (unsigned i = 0; i < digits; ++i) {
                    widest *= 10;
                }
                widest -= 1;
                std::size_t expected_rows = 2;
                for (const auto& entry : catalog.entries()) {
                    if (fits(entry, widest, s)) {
                        ++expected_rows;
                    }
                }
                CHECK(report.rows.size() == expected_rows);

                for (const auto& row : report.rows) {
                    CHECK(row.efficiency_percent ==
                          space_efficiency(varchar_bytes, row.bytes));
                    CHECK(row.efficiency_percent < 100.0);
                }
            }
        }
    }
    CHECK_THROWS_AS(
        compare_representations(0, catalog, Signedness::signed_int,
                                AccountingMode::actual_data),
        error);
    CHECK_THROWS_AS(
        compare_representations(20, catalog, Signedness::signed_int,
                                AccountingMode::actual_data),
        error);
}
