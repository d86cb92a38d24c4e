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

#include <random>

#include <doctest.h>

using namespace idrep;

namespace {

IdSchema sid_schema() {
    return IdSchema::from_file(std::string(IDREP_DATA_DIR) + "/sid_schema.json");
}

// Valid ids for the bundled schema: coded fields sample a known code,
// serial fields take arbitrary digits.
std::string random_valid_sid(std::mt19937_64& rng) {
    static const char* levels[] = {"3", "4"};
    static const char* programs[] = {"01", "02", "03"};
    std::string id = levels[rng() % 2];
    id += programs[rng() % 3];
    for (int i = 0; i < 5; ++i) {
        id.push_back(static_cast<char>('0' + rng() % 10));
    }
    return id;
}

} // namespace

TEST_CASE("bundled schema has the documented shape") {
    const auto schema = sid_schema();
    CHECK(schema.name() == "sid");
    CHECK(schema.total_width() == 8);
    REQUIRE(schema.fields().size() == 4);
    CHECK(schema.fields()[0].width == 1);
    CHECK(schema.fields()[1].width == 2);
    CHECK(schema.fields()[2].width == 2);
    CHECK(schema.fields()[3].width == 3);
    CHECK(schema.fields()[0].kind == FieldKind::coded);
    CHECK(schema.fields()[2].kind == FieldKind::serial);
}

TEST_CASE("schema document validation") {
    CHECK_THROWS_AS(IdSchema::from_json("{"), error);
    CHECK_THROWS_AS(IdSchema::from_json(R"({"name": "x", "fields": []})"), error);

    // duplicate field names
    CHECK_THROWS_WITH_AS(IdSchema::from_json(R"({"name": "x", "fields": [
        {"name": "a", "width": 2, "kind": "serial"},
        {"name": "a", "width": 3, "kind": "serial"}
    ]})"),
                         doctest::Contains("duplicate"), error);

    // total width above the packable maximum
    CHECK_THROWS_WITH_AS(IdSchema::from_json(R"({"name": "x", "fields": [
        {"name": "a", "width": 20, "kind": "serial"}
    ]})"),
                         doctest::Contains("19"), error);

    // declared total_width must match the field sum
    CHECK_THROWS_AS(IdSchema::from_json(R"({"name": "x", "total_width": 9, "fields": [
        {"name": "a", "width": 8, "kind": "serial"}
    ]})"),
                    error);

    // coded field without codes; code of the wrong width
    CHECK_THROWS_AS(IdSchema::from_json(R"({"name": "x", "fields": [
        {"name": "a", "width": 1, "kind": "enum"}
    ]})"),
                    error);
    CHECK_THROWS_AS(IdSchema::from_json(R"({"name": "x", "fields": [
        {"name": "a", "width": 2, "kind": "enum", "codes": {"1": "one"}}
    ]})"),
                    error);
}

TEST_CASE("validate reports violations as data") {
    const auto schema = sid_schema();

    SUBCASE("a known-good id") {
        const auto report = schema.validate("30108001");
        CHECK(report.ok());
        CHECK(report.violations.empty());
        const auto parsed = schema.parse("30108001");
        REQUIRE(parsed.components.size() == 4);
        CHECK(parsed.components[0].digits == "3");
        CHECK(parsed.components[1].digits == "01");
        CHECK(parsed.components[2].digits == "08");
        CHECK(parsed.components[3].digits == "001");
    }

    SUBCASE("unknown level code") {
        const auto report = schema.validate("50108001");
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].field == "level");
        CHECK(report.violations[0].reason == "unknown code '5'");
    }

    SUBCASE("wrong length") {
        const auto report = schema.validate("3010800");
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].reason == "length 7 != 8");
    }

    SUBCASE("non-digit content") {
        CHECK_FALSE(schema.validate("ABCD0001").ok());
        CHECK_THROWS_AS(schema.parse("ABCD0001"), error);
    }

    SUBCASE("permissive downgrades unknown codes to warnings") {
        const auto report = schema.validate("50108001", Strictness::permissive);
        CHECK(report.ok());
        REQUIRE(report.warnings.size() == 1);
        CHECK(report.warnings[0].field == "level");
        CHECK(schema.pack("50108001", Strictness::permissive) == 50108001ULL);
    }
}

TEST_CASE("parse resolves labels for coded fields only") {
    const auto schema = sid_schema();
    const auto parsed = schema.parse("40210123");
    REQUIRE(parsed.components.size() == 4);
    CHECK(parsed.components[0].label == "Diploma 4");
    CHECK(parsed.components[1].label == "Computer Engineering");
    CHECK_FALSE(parsed.components[2].label.has_value()); // year is a serial field
    CHECK(parsed.components[3].digits == "123");
    CHECK_FALSE(parsed.components[3].label.has_value());

    CHECK(schema.parse("30103189").components[3].digits == "189");

    // components re-concatenate to the input
    std::string joined;
    for (const auto& c : parsed.components) {
        joined += c.digits;
    }
    CHECK(joined == parsed.raw);
}

TEST_CASE("pack and unpack") {
    const auto schema = sid_schema();
    const auto serial8 = IdSchema::serial("id8", 8);

    CHECK(schema.pack("30108001") == 30108001ULL);
    CHECK(serial8.pack("00000001") == 1ULL);
    CHECK(serial8.pack("99999999") == 99999999ULL);
    CHECK_THROWS_AS(schema.pack("50108001"), error);

    CHECK(schema.unpack(30108001ULL) == "30108001");
    CHECK(serial8.unpack(1ULL) == "00000001");
    CHECK_THROWS_WITH_AS(serial8.unpack(100000000ULL),
                         doctest::Contains("does not fit"), error);
}

TEST_CASE("codec round trips") {
    const auto schema = sid_schema();
    const auto serial8 = IdSchema::serial("id8", 8);
    std::mt19937_64 rng(7003);

    for (int iter = 0; iter < 1000; ++iter) {
        const std::string id = random_valid_sid(rng);
        CHECK(schema.unpack(schema.pack(id)) == id);
    }
    for (int iter = 0; iter < 1000; ++iter) {
        const value_t v = rng() % 100000000ULL;
        CHECK(serial8.pack(serial8.unpack(v)) == v);
    }
}

TEST_CASE("pack preserves lexicographic order of equal-width ids") {
    const auto serial8 = IdSchema::serial("id8", 8);
    std::mt19937_64 rng(7004);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::string a = serial8.unpack(rng() % 100000000ULL);
        const std::string b = serial8.unpack(rng() % 100000000ULL);
        if (a < b) {
            CHECK(serial8.pack(a) < serial8.pack(b));
        } else if (a == b) {
            CHECK(serial8.pack(a) == serial8.pack(b));
        } else {
            CHECK(serial8.pack(a) > serial8.pack(b));
        }
    }
}

TEST_CASE("recommended_type delegates to the catalog") {
    const auto& catalog = TypeCatalog::mysql_defaults();

    const auto pick = sid_schema().recommended_type(catalog, Signedness::signed_int);
    REQUIRE(pick.has_value());
    CHECK(pick->name() == "INT");

    CHECK(IdSchema::serial("w2", 2)
              .recommended_type(catalog, Signedness::unsigned_int)
              ->name() == "TINYINT");

    // 19 nines exceed the signed 8-byte maximum but not the unsigned one.
    const auto wide = IdSchema::serial("w19", 19);
    CHECK_FALSE(wide.recommended_type(catalog, Signedness::signed_int).has_value());
    CHECK(wide.recommended_type(catalog, Signedness::unsigned_int)->name() == "BIGINT");
}
