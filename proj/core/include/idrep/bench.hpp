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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idrep/error.hpp"
#include "idrep/int_types.hpp"

namespace idrep {

/// In-process string-key vs integer-key lookup experiment.
///
/// Wall-clock timings depend on the host and are reported as-is; the
/// portable signal is the deterministic comparator cost: every key
/// comparison counts one invocation, and cost units charge the bytes a
/// string comparison examines before deciding (early exit at the first
/// mismatching byte) versus one unit per integer comparison.

inline constexpr unsigned record_key_digits = 8;

struct Record {
    value_t sid_value = 0;
    std::string sid_text; ///< fixed-width decimal rendering of sid_value
    std::string name;
};

/// Consecutive-key record set: record i holds start + i.
class Dataset {
public:
    static constexpr value_t default_start = 10100001;
    static constexpr std::size_t default_count = 100000;
    static constexpr std::string_view default_fill_name = "Ananda Putera Perkasa";

    /// Keys must stay within 8 decimal digits.
    static Dataset generate(value_t start = default_start,
                            std::size_t count = default_count,
                            std::string_view fill_name = default_fill_name);

    const std::vector<Record>& records() const noexcept { return records_; }
    value_t start() const noexcept { return start_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

private:
    Dataset(std::vector<Record> records, value_t start)
        : records_(std::move(records)), start_(start) {}

    std::vector<Record> records_;
    value_t start_ = 0;
};

enum class IndexKind {
    scan,   ///< in-order traversal, early exit on match
    sorted, ///< binary search over ascending keys
    hash,   ///< chained hash buckets
};

enum class KeyRepr { string_key, integer_key };
enum class TimingMode { per_query, batch };

std::string_view to_string(IndexKind kind) noexcept;
std::string_view to_string(KeyRepr repr) noexcept;
std::string_view to_string(TimingMode mode) noexcept;

struct LookupCost {
    std::uint64_t comparisons = 0;
    std::uint64_t cost_units = 0;
};

/// Immutable lookup structure over one dataset and one key representation.
/// Lookups accumulate into a caller-owned cost counter, so a built index
/// can be shared read-only across runs.
class Index {
public:
    static Index build(const Dataset& dataset, KeyRepr repr, IndexKind kind);

    KeyRepr key_repr() const noexcept { return repr_; }
    IndexKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }

    /// Record position for the key, or nullopt on a miss.
    std::optional<std::size_t> find(std::string_view key, LookupCost& cost) const;
    std::optional<std::size_t> find(value_t key, LookupCost& cost) const;

private:
    Index() = default;

    std::optional<std::size_t> find_str(std::string_view key, LookupCost& cost) const;
    std::optional<std::size_t> find_int(value_t key, LookupCost& cost) const;

    KeyRepr repr_ = KeyRepr::string_key;
    IndexKind kind_ = IndexKind::scan;
    std::size_t size_ = 0;

    // scan/hash keep insertion order; sorted keeps ascending key order
    // with positions_ mapping back to record indexes.
    std::vector<std::string> str_keys_;
    std::vector<value_t> int_keys_;
    std::vector<std::uint32_t> positions_;

    std::vector<std::uint32_t> bucket_head_;
    std::vector<std::uint32_t> chain_next_;
    std::size_t bucket_mask_ = 0;
};

struct WorkloadSpec {
    value_t target_key = 10200000;
    std::uint64_t repetitions = 100000;
    IndexKind index_kind = IndexKind::scan;
    KeyRepr key_repr = KeyRepr::string_key;
    TimingMode timing = TimingMode::per_query;
};

struct RunResult {
    double total_seconds = 0.0;
    std::uint64_t found_count = 0;
    std::uint64_t comparator_invocations = 0;
    std::uint64_t cost_units = 0;
};

/// Monotonic time source in nanoseconds; injectable for tests.
using ClockFn = std::function<std::uint64_t()>;

ClockFn steady_clock_ns();

/// Executes `repetitions` lookups of the target key. per_query sums one
/// clock reading around each lookup; batch takes a single reading around
/// the whole loop. Cost counters accumulate identically in both modes.
RunResult run_workload(const Index& index, const WorkloadSpec& workload,
                       const ClockFn& clock = steady_clock_ns());

struct BenchSummary {
    std::vector<RunResult> runs_string;
    std::vector<RunResult> runs_integer;
    double total_string_seconds = 0.0;
    double total_integer_seconds = 0.0;
    /// (total_string - total_integer) / total_string * 100; negative means
    /// the integer side was slower.
    double eta_percent = 0.0;
};

BenchSummary compare_runs(std::vector<RunResult> runs_string,
                          std::vector<RunResult> runs_integer);

struct SummaryRow {
    unsigned run = 0;
    double string_seconds = 0.0;
    double integer_seconds = 0.0;
};

std::vector<SummaryRow> summary_rows(const BenchSummary& summary);

/// CSV stream of the per-run timings, suitable for external plotting:
/// header "run,string_seconds,integer_seconds" then one row per run.
std::string summary_csv(const BenchSummary& summary);

struct ExperimentSpec {
    value_t start = Dataset::default_start;
    std::size_t records = Dataset::default_count;
    std::string fill_name = std::string(Dataset::default_fill_name);
    value_t target_key = 10200000;
    std::uint64_t repetitions = 100000;
    unsigned runs = 15;
    IndexKind index_kind = IndexKind::scan;
    TimingMode timing = TimingMode::per_query;
};

/// Full experiment: generate the dataset, build both indexes, one untimed
/// warm-up lookup per index, then alternate string/integer timed runs on a
/// single thread.
BenchSummary run_experiment(const ExperimentSpec& spec,
                            const ClockFn& clock = steady_clock_ns());

} // namespace idrep
