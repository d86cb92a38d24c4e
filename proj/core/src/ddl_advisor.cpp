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
#include "idrep/ddl_advisor.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace idrep {

namespace {

std::string to_upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

struct Token {
    enum class Kind { ident, number, lparen, rparen, comma, semicolon, end };
    Kind kind = Kind::end;
    std::string text;
    unsigned line = 1;
    unsigned column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            return tok;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                tok.text.push_back(text_[pos_]);
                advance();
            }
            tok.kind = Token::Kind::ident;
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok.text.push_back(text_[pos_]);
                advance();
            }
            tok.kind = Token::Kind::number;
            return tok;
        }
        tok.text.push_back(c);
        advance();
        switch (c) {
            case '(': tok.kind = Token::Kind::lparen; return tok;
            case ')': tok.kind = Token::Kind::rparen; return tok;
            case ',': tok.kind = Token::Kind::comma; return tok;
            case ';': tok.kind = Token::Kind::semicolon; return tok;
            default:
                fail(tok, std::string("unexpected character '") + c + "'");
        }
        return tok;
    }

    [[noreturn]] static void fail(const Token& at, const std::string& message) {
        raise(errc::parse_error, std::to_string(at.line) + ":" +
                                     std::to_string(at.column) + ": " + message);
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned column_ = 1;
};

class DdlParser {
public:
    DdlParser(std::string_view text, const TypeCatalog& catalog)
        : lexer_(text), catalog_(catalog) {
        shift();
    }

    DdlTable parse() {
        expect_keyword("CREATE");
        expect_keyword("TABLE");
        DdlTable table;
        table.name = expect(Token::Kind::ident, "table name").text;
        expect(Token::Kind::lparen, "'('");
        if (current_.kind == Token::Kind::rparen) {
            Lexer::fail(current_, "column list must not be empty");
        }
        std::unordered_set<std::string> seen;
        while (true) {
            DdlColumn column = parse_column();
            if (!seen.insert(column.name).second) {
                Lexer::fail(current_, "duplicate column name '" + column.name + "'");
            }
            table.columns.push_back(std::move(column));
            if (current_.kind == Token::Kind::comma) {
                shift();
                continue;
            }
            break;
        }
        expect(Token::Kind::rparen, "')' or ','");
        if (current_.kind == Token::Kind::semicolon) {
            shift();
        }
        if (current_.kind != Token::Kind::end) {
            Lexer::fail(current_, "trailing input after the table definition");
        }
        return table;
    }

private:
    DdlColumn parse_column() {
        DdlColumn column;
        column.name = expect(Token::Kind::ident, "column name").text;
        const Token type_tok = expect(Token::Kind::ident, "column type");
        const std::string type_name = to_upper(type_tok.text);

        if (type_name == "CHAR" || type_name == "VARCHAR") {
            const bool fixed = type_name == "CHAR";
            column.type_class =
                fixed ? DdlColumn::TypeClass::fixed_char : DdlColumn::TypeClass::var_char;
            expect(Token::Kind::lparen, "'(' with a declared length");
            const Token len_tok = expect(Token::Kind::number, "declared length");
            const std::size_t bound = fixed ? fixed_char_max_len : var_char_max_len;
            if (len_tok.text.size() > 5 ||
                (column.declared_len = std::stoull(len_tok.text)) > bound) {
                Lexer::fail(len_tok, type_name + " length must be at most " +
                                         std::to_string(bound));
            }
            expect(Token::Kind::rparen, "')'");
            return column;
        }
        if (type_name == "DATE") {
            column.type_class = DdlColumn::TypeClass::date;
            reject_length(type_name);
            return column;
        }
        if (auto spec = catalog_.find(type_name)) {
            column.type_class = DdlColumn::TypeClass::integer;
            column.int_spec = std::move(spec);
            reject_length(type_name);
            return column;
        }
        raise(errc::unsupported_type,
              std::to_string(type_tok.line) + ":" + std::to_string(type_tok.column) +
                  ": unsupported type '" + type_tok.text + "'");
    }

    void reject_length(const std::string& type_name) {
        if (current_.kind == Token::Kind::lparen) {
            Lexer::fail(current_, type_name + " takes no length argument");
        }
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind) {
            Lexer::fail(current_, "expected " + what + ", got '" +
                                      (current_.kind == Token::Kind::end ? "<end>"
                                                                         : current_.text) +
                                      "'");
        }
        Token tok = current_;
        shift();
        return tok;
    }

    void expect_keyword(const std::string& keyword) {
        if (current_.kind != Token::Kind::ident || to_upper(current_.text) != keyword) {
            Lexer::fail(current_, "expected " + keyword);
        }
        shift();
    }

    void shift() { current_ = lexer_.next(); }

    Lexer lexer_;
    const TypeCatalog& catalog_;
    Token current_;
};

bool all_digits(std::string_view text) {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) {
               return std::isdigit(c) != 0;
           });
}

bool is_character_column(const DdlColumn& col) {
    return col.type_class == DdlColumn::TypeClass::fixed_char ||
           col.type_class == DdlColumn::TypeClass::var_char;
}

} // namespace

std::string DdlColumn::type_label() const {
    switch (type_class) {
        case TypeClass::fixed_char:
            return "CHAR(" + std::to_string(declared_len) + ")";
        case TypeClass::var_char:
            return "VARCHAR(" + std::to_string(declared_len) + ")";
        case TypeClass::integer:
            return int_spec->name();
        case TypeClass::date:
            return "DATE";
    }
    return {};
}

ColumnSpec DdlColumn::to_column_spec() const {
    switch (type_class) {
        case TypeClass::fixed_char:
            return ColumnSpec::fixed_char(declared_len);
        case TypeClass::var_char:
            return ColumnSpec::var_char(declared_len);
        case TypeClass::integer:
            return ColumnSpec::integer(*int_spec);
        case TypeClass::date:
            break;
    }
    raise(errc::unsupported_type, "column '" + name + "' has no byte model");
}

const DdlColumn* DdlTable::find_column(std::string_view name) const {
    for (const auto& col : columns) {
        if (col.name == name) {
            return &col;
        }
    }
    return nullptr;
}

DdlTable parse_ddl(std::string_view text, const TypeCatalog& catalog) {
    return DdlParser(text, catalog).parse();
}

std::string to_ddl(const DdlTable& table) {
    std::string out = "CREATE TABLE " + table.name + " (\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += "  " + table.columns[i].name + " " + table.columns[i].type_label();
        if (i + 1 < table.columns.size()) {
            out += ",";
        }
        out += "\n";
    }
    out += ");\n";
    return out;
}

std::vector<NumericCandidate> detect_numeric_columns(const DdlTable& table,
                                                     const SampleSet& samples,
                                                     std::size_t min_samples) {
    std::vector<NumericCandidate> candidates;
    for (const auto& col : table.columns) {
        if (!is_character_column(col)) {
            continue;
        }
        const auto it = samples.find(col.name);
        if (it == samples.end() || it->second.size() < std::max<std::size_t>(min_samples, 1)) {
            continue;
        }
        const auto& values = it->second;
        bool numeric = true;
        bool leading_zero = false;
        std::size_t width = values.front().size();
        for (const auto& v : values) {
            if (!all_digits(v) || v.size() != width) {
                numeric = false;
                break;
            }
            if (v.size() > 1 && v.front() == '0') {
                leading_zero = true;
            }
        }
        if (!numeric || width > max_decimal_digits) {
            continue;
        }
        candidates.push_back({col.name, static_cast<unsigned>(width), values.size(),
                              leading_zero});
    }
    return candidates;
}

Recommendation recommend(const DdlTable& table, const NumericCandidate& candidate,
                         const TypeCatalog& catalog, Signedness s,
                         AccountingMode mode) {
    const DdlColumn* col = table.find_column(candidate.column);
    if (col == nullptr || !is_character_column(*col)) {
        raise(errc::unsupported_type,
              "candidate '" + candidate.column + "' is not a character column of '" +
                  table.name + "'");
    }
    const value_t widest = max_decimal_value(candidate.observed_width);
    auto proposed = select_min_type(catalog, widest, s);
    if (!proposed) {
        raise(errc::no_fitting_type,
              "no catalog type holds " + std::to_string(candidate.observed_width) +
                  " digits " + std::string(to_string(s)));
    }

    Recommendation rec{
        candidate.column,
        candidate.observed_width,
        col->type_label(),
        column_bytes(col->to_column_spec(),
                     std::string(candidate.observed_width, '9'), mode),
        *proposed,
        proposed->bytes(),
        0.0,
        mode,
        {},
    };
    rec.efficiency_percent = space_efficiency(rec.current_bytes, rec.proposed_bytes);
    if (candidate.has_leading_zero) {
        rec.warnings.push_back(
            "sampled values carry leading zeros; integer storage drops them unless "
            "ids are rendered back at fixed width");
    }
    return rec;
}

} // namespace idrep
