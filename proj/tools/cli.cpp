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
#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idrep/bench.hpp"
#include "idrep/ddl_advisor.hpp"
#include "idrep/error.hpp"
#include "idrep/format.hpp"
#include "idrep/id_schema.hpp"
#include "idrep/int_types.hpp"
#include "idrep/storage_model.hpp"

namespace idrep::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { table, json, csv };

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int exit_code_for(errc code) {
    switch (code) {
        case errc::invalid_id:
        case errc::value_out_of_range:
        case errc::no_fitting_type:
            return 2;
        case errc::representation_mismatch:
        case errc::run_count_mismatch:
        case errc::zero_total_time:
        case errc::internal:
            return 3;
        default:
            return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        raise(errc::io_error, "cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> gather_inputs(const std::vector<std::string>& args,
                                       std::istream& in) {
    if (!args.empty()) {
        return args;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    return lines;
}

value_t parse_value(const std::string& text) {
    value_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        raise(errc::usage, "not an unsigned integer: '" + text + "'");
    }
    return v;
}

TypeCatalog load_catalog(const std::string& path) {
    if (path.empty()) {
        return TypeCatalog::mysql_defaults();
    }
    return TypeCatalog::from_file(path);
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out << ",";
        }
        out << csv_field(cells[i]);
    }
    out << "\n";
}

// ---------------------------------------------------------------------
// schema subcommands

std::string components_brief(const ParsedId& parsed) {
    std::string text;
    for (const auto& c : parsed.components) {
        if (!text.empty()) {
            text += " ";
        }
        text += c.field + "=" + c.digits;
    }
    return text;
}

std::string violations_brief(const std::vector<Violation>& violations) {
    std::string text;
    for (const auto& v : violations) {
        if (!text.empty()) {
            text += "; ";
        }
        text += v.field.empty() ? v.reason : v.field + ": " + v.reason;
    }
    return text;
}

int run_schema_validate(Context& ctx, const std::string& schema_file, bool permissive,
                        const std::vector<std::string>& id_args, OutputFormat format) {
    const auto schema = IdSchema::from_file(schema_file);
    const auto strictness = permissive ? Strictness::permissive : Strictness::strict;
    const auto ids = gather_inputs(id_args, ctx.in);

    bool any_invalid = false;
    ordered_json json_out = ordered_json::array();
    TextTable table({"id", "status", "detail"}, {Align::left, Align::left, Align::left});
    if (format == OutputFormat::csv) {
        emit_csv_row(ctx.out, {"id", "status", "detail"});
    }

    for (const auto& id : ids) {
        const auto report = schema.validate(id, strictness);
        any_invalid = any_invalid || !report.ok();

        std::string detail;
        if (report.ok()) {
            detail = components_brief(schema.parse(id, strictness));
            if (!report.warnings.empty()) {
                detail += " [warning: " + violations_brief(report.warnings) + "]";
            }
        } else {
            detail = violations_brief(report.violations);
        }
        const std::string status = report.ok() ? "ok" : "invalid";

        switch (format) {
            case OutputFormat::table:
                table.add_row({id, status, detail});
                break;
            case OutputFormat::csv:
                emit_csv_row(ctx.out, {id, status, detail});
                break;
            case OutputFormat::json: {
                ordered_json entry{{"id", id}, {"ok", report.ok()}};
                if (report.ok()) {
                    ordered_json components = ordered_json::array();
                    for (const auto& c : schema.parse(id, strictness).components) {
                        ordered_json jc{{"field", c.field}, {"digits", c.digits}};
                        jc["label"] = c.label ? ordered_json(*c.label) : ordered_json();
                        components.push_back(std::move(jc));
                    }
                    entry["components"] = std::move(components);
                }
                ordered_json violations = ordered_json::array();
                for (const auto& v : report.violations) {
                    violations.push_back({{"field", v.field}, {"reason", v.reason}});
                }
                entry["violations"] = std::move(violations);
                ordered_json warnings = ordered_json::array();
                for (const auto& v : report.warnings) {
                    warnings.push_back({{"field", v.field}, {"reason", v.reason}});
                }
                entry["warnings"] = std::move(warnings);
                json_out.push_back(std::move(entry));
                break;
            }
        }
    }

    if (format == OutputFormat::table) {
        ctx.out << table.str();
    } else if (format == OutputFormat::json) {
        ctx.out << json_out.dump(2) << "\n";
    }
    return any_invalid ? 2 : 0;
}

int run_schema_parse(Context& ctx, const std::string& schema_file, bool permissive,
                     const std::vector<std::string>& id_args, OutputFormat format) {
    const auto schema = IdSchema::from_file(schema_file);
    const auto strictness = permissive ? Strictness::permissive : Strictness::strict;
    const auto ids = gather_inputs(id_args, ctx.in);

    ordered_json json_out = ordered_json::array();
    TextTable table({"id", "field", "digits", "label"},
                    {Align::left, Align::left, Align::left, Align::left});
    if (format == OutputFormat::csv) {
        emit_csv_row(ctx.out, {"id", "field", "digits", "label"});
    }

    for (const auto& id : ids) {
        const auto parsed = schema.parse(id, strictness);
        switch (format) {
            case OutputFormat::table:
                for (const auto& c : parsed.components) {
                    table.add_row({id, c.field, c.digits, c.label.value_or("-")});
                }
                break;
            case OutputFormat::csv:
                for (const auto& c : parsed.components) {
                    emit_csv_row(ctx.out, {id, c.field, c.digits, c.label.value_or("")});
                }
                break;
            case OutputFormat::json: {
                ordered_json components = ordered_json::array();
                for (const auto& c : parsed.components) {
                    ordered_json jc{{"field", c.field}, {"digits", c.digits}};
                    jc["label"] = c.label ? ordered_json(*c.label) : ordered_json();
                    components.push_back(std::move(jc));
                }
                json_out.push_back({{"id", id}, {"components", std::move(components)}});
                break;
            }
        }
    }

    if (format == OutputFormat::table) {
        ctx.out << table.str();
    } else if (format == OutputFormat::json) {
        ctx.out << json_out.dump(2) << "\n";
    }
    return 0;
}

int run_schema_pack(Context& ctx, const std::string& schema_file, bool permissive,
                    const std::vector<std::string>& id_args, OutputFormat format) {
    const auto schema = IdSchema::from_file(schema_file);
    const auto strictness = permissive ? Strictness::permissive : Strictness::strict;
    const auto ids = gather_inputs(id_args, ctx.in);

    ordered_json json_out = ordered_json::array();
    if (format == OutputFormat::csv) {
        emit_csv_row(ctx.out, {"id", "value"});
    }
    for (const auto& id : ids) {
        const value_t value = schema.pack(id, strictness);
        switch (format) {
            case OutputFormat::table:
                ctx.out << value << "\n";
                break;
            case OutputFormat::csv:
                emit_csv_row(ctx.out, {id, std::to_string(value)});
                break;
            case OutputFormat::json:
                json_out.push_back({{"id", id}, {"value", value}});
                break;
        }
    }
    if (format == OutputFormat::json) {
        ctx.out << json_out.dump(2) << "\n";
    }
    return 0;
}

int run_schema_unpack(Context& ctx, const std::string& schema_file,
                      const std::vector<std::string>& value_args, OutputFormat format) {
    const auto schema = IdSchema::from_file(schema_file);
    const auto values = gather_inputs(value_args, ctx.in);

    ordered_json json_out = ordered_json::array();
    if (format == OutputFormat::csv) {
        emit_csv_row(ctx.out, {"value", "id"});
    }
    for (const auto& text : values) {
        const value_t value = parse_value(text);
        const std::string id = schema.unpack(value);
        switch (format) {
            case OutputFormat::table:
                ctx.out << id << "\n";
                break;
            case OutputFormat::csv:
                emit_csv_row(ctx.out, {std::to_string(value), id});
                break;
            case OutputFormat::json:
                json_out.push_back({{"value", value}, {"id", id}});
                break;
        }
    }
    if (format == OutputFormat::json) {
        ctx.out << json_out.dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------
// space compare

int run_space_compare(Context& ctx, unsigned digits, bool unsigned_range,
                      AccountingMode mode, const std::string& catalog_file,
                      OutputFormat format) {
    const auto catalog = load_catalog(catalog_file);
    const auto s = unsigned_range ? Signedness::unsigned_int : Signedness::signed_int;
    const auto report = compare_representations(digits, catalog, s, mode);

    switch (format) {
        case OutputFormat::table: {
            ctx.out << "digits: " << report.digits
                    << "  signedness: " << to_string(report.signedness)
                    << "  accounting: " << to_string(report.mode)
                    << "  baseline: " << report.baseline_label << "\n\n";
            TextTable table({"representation", "bytes", "efficiency_percent"},
                            {Align::left, Align::right, Align::right});
            for (const auto& row : report.rows) {
                table.add_row({row.label, std::to_string(row.bytes),
                               format_percent(row.efficiency_percent)});
            }
            ctx.out << table.str();
            break;
        }
        case OutputFormat::csv:
            emit_csv_row(ctx.out, {"representation", "bytes", "efficiency_percent"});
            for (const auto& row : report.rows) {
                emit_csv_row(ctx.out, {row.label, std::to_string(row.bytes),
                                       format_percent(row.efficiency_percent)});
            }
            break;
        case OutputFormat::json: {
            ordered_json rows = ordered_json::array();
            for (const auto& row : report.rows) {
                rows.push_back({{"representation", row.label},
                                {"bytes", row.bytes},
                                {"efficiency_percent",
                                 format_percent(row.efficiency_percent)}});
            }
            const ordered_json doc{{"digits", report.digits},
                                   {"signedness", to_string(report.signedness)},
                                   {"accounting", to_string(report.mode)},
                                   {"baseline", report.baseline_label},
                                   {"rows", std::move(rows)}};
            ctx.out << doc.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------
// bench run

int run_bench(Context& ctx, const ExperimentSpec& spec, OutputFormat format) {
    const auto summary = run_experiment(spec);
    const auto rows = summary_rows(summary);

    switch (format) {
        case OutputFormat::table: {
            ctx.out << "records: " << spec.records << "  reps: " << spec.repetitions
                    << "  runs: " << spec.runs
                    << "  index: " << to_string(spec.index_kind)
                    << "  timing: " << to_string(spec.timing)
                    << "  target: " << spec.target_key << "\n\n";
            TextTable table({"run", "string_seconds", "integer_seconds"},
                            {Align::right, Align::right, Align::right});
            for (const auto& row : rows) {
                table.add_row({std::to_string(row.run),
                               format_fixed(row.string_seconds, 6),
                               format_fixed(row.integer_seconds, 6)});
            }
            table.add_row({"total", format_fixed(summary.total_string_seconds, 6),
                           format_fixed(summary.total_integer_seconds, 6)});
            ctx.out << table.str();
            ctx.out << "\neta_percent: " << format_percent(summary.eta_percent) << "\n";

            const auto& rs = summary.runs_string.front();
            const auto& ri = summary.runs_integer.front();
            ctx.out << "\ncost per run (deterministic):\n"
                    << "  comparator_invocations  string=" << rs.comparator_invocations
                    << " integer=" << ri.comparator_invocations << "\n"
                    << "  cost_units              string=" << rs.cost_units
                    << " integer=" << ri.cost_units << "\n"
                    << "  found_count             string=" << rs.found_count
                    << " integer=" << ri.found_count << "\n";
            break;
        }
        case OutputFormat::csv:
            ctx.out << summary_csv(summary);
            break;
        case OutputFormat::json: {
            ordered_json run_list = ordered_json::array();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& rs = summary.runs_string[i];
                const auto& ri = summary.runs_integer[i];
                run_list.push_back({{"run", rows[i].run},
                                    {"string_seconds",
                                     format_fixed(rs.total_seconds, 12)},
                                    {"integer_seconds",
                                     format_fixed(ri.total_seconds, 12)},
                                    {"string_comparisons", rs.comparator_invocations},
                                    {"integer_comparisons", ri.comparator_invocations},
                                    {"string_cost_units", rs.cost_units},
                                    {"integer_cost_units", ri.cost_units},
                                    {"string_found", rs.found_count},
                                    {"integer_found", ri.found_count}});
            }
            const ordered_json doc{
                {"records", spec.records},
                {"reps", spec.repetitions},
                {"runs", spec.runs},
                {"index", to_string(spec.index_kind)},
                {"timing", to_string(spec.timing)},
                {"target", spec.target_key},
                {"start", spec.start},
                {"runs_detail", std::move(run_list)},
                {"total_string_seconds",
                 format_fixed(summary.total_string_seconds, 12)},
                {"total_integer_seconds",
                 format_fixed(summary.total_integer_seconds, 12)},
                {"eta_percent", format_percent(summary.eta_percent)}};
            ctx.out << doc.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------
// advise

std::vector<std::string> split_csv_line(const std::string& line, unsigned line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    if (quoted) {
        raise(errc::parse_error,
              "samples line " + std::to_string(line_no) + ": unterminated quote");
    }
    fields.push_back(std::move(field));
    return fields;
}

SampleSet load_samples_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    unsigned line_no = 0;
    std::vector<std::string> header;
    SampleSet samples;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_line(line, line_no);
        if (header.empty()) {
            header = std::move(fields);
            continue;
        }
        if (fields.size() != header.size()) {
            raise(errc::parse_error, "samples line " + std::to_string(line_no) +
                                         ": expected " + std::to_string(header.size()) +
                                         " fields, got " + std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            samples[header[i]].push_back(std::move(fields[i]));
        }
    }
    if (header.empty()) {
        raise(errc::parse_error, "samples file has no header row: " + path);
    }
    return samples;
}

int run_advise(Context& ctx, const std::string& ddl_file, const std::string& samples_file,
               AccountingMode mode, bool unsigned_range, std::size_t min_samples,
               const std::string& catalog_file, OutputFormat format) {
    const auto catalog = load_catalog(catalog_file);
    const auto s = unsigned_range ? Signedness::unsigned_int : Signedness::signed_int;
    const auto table = parse_ddl(read_file(ddl_file), catalog);
    const auto samples = load_samples_csv(samples_file);
    const auto candidates = detect_numeric_columns(table, samples, min_samples);

    std::vector<Recommendation> recommendations;
    for (const auto& candidate : candidates) {
        try {
            recommendations.push_back(recommend(table, candidate, catalog, s, mode));
        } catch (const error& e) {
            if (e.code() != errc::no_fitting_type) {
                throw;
            }
            ctx.err << "note: " << candidate.column << ": " << e.what() << "\n";
        }
    }

    switch (format) {
        case OutputFormat::table: {
            if (recommendations.empty()) {
                ctx.out << "no candidate columns\n";
                break;
            }
            ctx.out << "table: " << table.name << "  signedness: " << to_string(s)
                    << "  accounting: " << to_string(mode) << "\n\n";
            TextTable text({"column", "width", "current", "current_bytes", "proposed",
                            "proposed_bytes", "efficiency_percent"},
                           {Align::left, Align::right, Align::left, Align::right,
                            Align::left, Align::right, Align::right});
            for (const auto& rec : recommendations) {
                text.add_row({rec.column, std::to_string(rec.observed_width),
                              rec.current_type, std::to_string(rec.current_bytes),
                              rec.proposed_type.name(),
                              std::to_string(rec.proposed_bytes),
                              format_percent(rec.efficiency_percent)});
            }
            ctx.out << text.str();
            for (const auto& rec : recommendations) {
                for (const auto& warning : rec.warnings) {
                    ctx.out << "warning: " << rec.column << ": " << warning << "\n";
                }
            }
            break;
        }
        case OutputFormat::csv:
            emit_csv_row(ctx.out,
                         {"column", "observed_width", "current_type", "current_bytes",
                          "proposed_type", "proposed_bytes", "efficiency_percent",
                          "warnings"});
            for (const auto& rec : recommendations) {
                std::string warnings;
                for (const auto& warning : rec.warnings) {
                    if (!warnings.empty()) {
                        warnings += "; ";
                    }
                    warnings += warning;
                }
                emit_csv_row(ctx.out,
                             {rec.column, std::to_string(rec.observed_width),
                              rec.current_type, std::to_string(rec.current_bytes),
                              rec.proposed_type.name(),
                              std::to_string(rec.proposed_bytes),
                              format_percent(rec.efficiency_percent), warnings});
            }
            break;
        case OutputFormat::json: {
            ordered_json recs = ordered_json::array();
            for (const auto& rec : recommendations) {
                recs.push_back({{"column", rec.column},
                                {"observed_width", rec.observed_width},
                                {"current_type", rec.current_type},
                                {"current_bytes", rec.current_bytes},
                                {"proposed_type", rec.proposed_type.name()},
                                {"proposed_bytes", rec.proposed_bytes},
                                {"efficiency_percent",
                                 format_percent(rec.efficiency_percent)},
                                {"warnings", rec.warnings}});
            }
            const ordered_json doc{{"table", table.name},
                                   {"signedness", to_string(s)},
                                   {"accounting", to_string(mode)},
                                   {"recommendations", std::move(recs)}};
            ctx.out << doc.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "json") return OutputFormat::json;
    return OutputFormat::csv;
}

AccountingMode parse_mode(const std::string& name) {
    return name == "declared" ? AccountingMode::declared_max
                              : AccountingMode::actual_data;
}

IndexKind parse_index_kind(const std::string& name) {
    if (name == "sorted") return IndexKind::sorted;
    if (name == "hash") return IndexKind::hash;
    return IndexKind::scan;
}

TimingMode parse_timing(const std::string& name) {
    return name == "batch" ? TimingMode::batch : TimingMode::per_query;
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->default_val("table");
}

void add_mode_option(CLI::App* cmd, std::string& mode) {
    cmd->add_option("--mode", mode, "Accounting mode for variable-width columns")
        ->check(CLI::IsMember({"actual", "declared"}))
        ->default_val("actual");
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Context ctx{in, out, err};
    CLI::App app{"Digit-structured identifier representation toolkit"};
    app.require_subcommand(1);

    int rc = 0;

    // schema
    auto* schema_cmd = app.add_subcommand("schema", "Identifier schema operations");
    schema_cmd->require_subcommand(1);

    struct SchemaOpts {
        std::string schema_file;
        bool permissive = false;
        std::vector<std::string> inputs;
        std::string format = "table";
    };

    auto add_schema_leaf = [&](const char* name, const char* help,
                               bool with_permissive) {
        auto opts = std::make_shared<SchemaOpts>();
        auto* cmd = schema_cmd->add_subcommand(name, help);
        cmd->add_option("--schema", opts->schema_file, "Schema document (JSON)")
            ->required();
        if (with_permissive) {
            cmd->add_flag("--permissive", opts->permissive,
                          "Downgrade unknown-code violations to warnings");
        }
        cmd->add_option("inputs", opts->inputs,
                        "Ids or values; read from standard input when omitted");
        add_format_option(cmd, opts->format);
        return std::make_pair(cmd, opts);
    };

    {
        auto [cmd, opts] = add_schema_leaf("validate", "Check ids against the schema", true);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_schema_validate(ctx, opts->schema_file, opts->permissive,
                                     opts->inputs, parse_format(opts->format));
        });
    }
    {
        auto [cmd, opts] = add_schema_leaf("parse", "Split ids into labeled components", true);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_schema_parse(ctx, opts->schema_file, opts->permissive,
                                  opts->inputs, parse_format(opts->format));
        });
    }
    {
        auto [cmd, opts] = add_schema_leaf("pack", "Convert ids to integer values", true);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_schema_pack(ctx, opts->schema_file, opts->permissive,
                                 opts->inputs, parse_format(opts->format));
        });
    }
    {
        auto [cmd, opts] =
            add_schema_leaf("unpack", "Render integer values as fixed-width ids", false);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_schema_unpack(ctx, opts->schema_file, opts->inputs,
                                   parse_format(opts->format));
        });
    }

    // space
    auto* space_cmd = app.add_subcommand("space", "Storage byte accounting");
    space_cmd->require_subcommand(1);
    {
        struct Opts {
            unsigned digits = 0;
            bool unsigned_range = false;
            std::string mode = "actual";
            std::string catalog_file;
            std::string format = "table";
        };
        auto opts = std::make_shared<Opts>();
        auto* cmd = space_cmd->add_subcommand(
            "compare", "Compare string and integer storage for an id width");
        cmd->add_option("--digits", opts->digits, "Identifier width in digits")
            ->required();
        cmd->add_flag("--unsigned", opts->unsigned_range,
                      "Use unsigned integer ranges");
        add_mode_option(cmd, opts->mode);
        cmd->add_option("--catalog", opts->catalog_file,
                        "Integer type catalog document (JSON)");
        add_format_option(cmd, opts->format);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_space_compare(ctx, opts->digits, opts->unsigned_range,
                                   parse_mode(opts->mode), opts->catalog_file,
                                   parse_format(opts->format));
        });
    }

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Lookup speed experiments");
    bench_cmd->require_subcommand(1);
    {
        struct Opts {
            ExperimentSpec spec;
            std::string index = "scan";
            std::string timing = "per_query";
            std::string format = "table";
        };
        auto opts = std::make_shared<Opts>();
        auto* cmd = bench_cmd->add_subcommand(
            "run", "Time repeated lookups against string- and integer-keyed stores");
        cmd->add_option("--records", opts->spec.records, "Records to generate")
            ->default_val(Dataset::default_count);
        cmd->add_option("--reps", opts->spec.repetitions, "Lookups per run")
            ->default_val(100000);
        cmd->add_option("--runs", opts->spec.runs, "Timed runs per representation")
            ->default_val(15);
        cmd->add_option("--index", opts->index, "Index kind")
            ->check(CLI::IsMember({"scan", "sorted", "hash"}))
            ->default_val("scan");
        cmd->add_option("--timing", opts->timing, "Timing mode")
            ->check(CLI::IsMember({"per_query", "batch"}))
            ->default_val("per_query");
        cmd->add_option("--target", opts->spec.target_key, "Key each lookup asks for")
            ->default_val(10200000);
        cmd->add_option("--start", opts->spec.start, "First generated key")
            ->default_val(Dataset::default_start);
        add_format_option(cmd, opts->format);
        cmd->callback([&rc, &ctx, opts] {
            opts->spec.index_kind = parse_index_kind(opts->index);
            opts->spec.timing = parse_timing(opts->timing);
            rc = run_bench(ctx, opts->spec, parse_format(opts->format));
        });
    }

    // advise
    {
        struct Opts {
            std::string ddl_file;
            std::string samples_file;
            std::string mode = "actual";
            bool unsigned_range = false;
            std::size_t min_samples = 1;
            std::string catalog_file;
            std::string format = "table";
        };
        auto opts = std::make_shared<Opts>();
        auto* cmd = app.add_subcommand(
            "advise", "Recommend integer types for digit-only character columns");
        cmd->add_option("--ddl", opts->ddl_file, "CREATE TABLE statement file")
            ->required();
        cmd->add_option("--samples", opts->samples_file,
                        "CSV of sample values with a column-name header")
            ->required();
        add_mode_option(cmd, opts->mode);
        cmd->add_flag("--unsigned", opts->unsigned_range,
                      "Use unsigned integer ranges");
        cmd->add_option("--min-samples", opts->min_samples,
                        "Minimum samples before a column qualifies")
            ->default_val(1);
        cmd->add_option("--catalog", opts->catalog_file,
                        "Integer type catalog document (JSON)");
        add_format_option(cmd, opts->format);
        cmd->callback([&rc, &ctx, opts] {
            rc = run_advise(ctx, opts->ddl_file, opts->samples_file,
                            parse_mode(opts->mode), opts->unsigned_range,
                            opts->min_samples, opts->catalog_file,
                            parse_format(opts->format));
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("idrep");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int cli_rc = app.exit(e, out, err);
        return cli_rc == 0 ? 0 : 1;
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}

} // namespace idrep::cli
