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
#include "idrep/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <limits>
#include <numeric>

namespace idrep {

namespace {

constexpr std::uint32_t npos32 = std::numeric_limits<std::uint32_t>::max();

std::string render_key(value_t v) {
    char buf[record_key_digits + 1];
    std::snprintf(buf, sizeof(buf), "%0*llu", static_cast<int>(record_key_digits),
                  static_cast<unsigned long long>(v));
    return std::string(buf);
}

// Byte-wise three-way comparison with early exit. Charges one cost unit
// per byte position examined; the mismatching position counts.
int compare_str(std::string_view a, std::string_view b, LookupCost& cost) {
    ++cost.comparisons;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        ++cost.cost_units;
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    if (a.size() == b.size()) {
        return 0;
    }
    return a.size() < b.size() ? -1 : 1;
}

int compare_int(value_t a, value_t b, LookupCost& cost) {
    ++cost.comparisons;
    ++cost.cost_units;
    return a < b ? -1 : (a > b ? 1 : 0);
}

std::uint64_t fnv1a(std::string_view key) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : key) {
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::string_view to_string(IndexKind kind) noexcept {
    switch (kind) {
        case IndexKind::scan: return "scan";
        case IndexKind::sorted: return "sorted";
        case IndexKind::hash: return "hash";
    }
    return "unknown";
}

std::string_view to_string(KeyRepr repr) noexcept {
    return repr == KeyRepr::string_key ? "string" : "integer";
}

std::string_view to_string(TimingMode mode) noexcept {
    return mode == TimingMode::per_query ? "per_query" : "batch";
}

Dataset Dataset::generate(value_t start, std::size_t count, std::string_view fill_name) {
    if (count > 0) {
        const value_t last = start + count - 1;
        if (last < start || last > max_decimal_value(record_key_digits)) {
            raise(errc::overflow, "keys " + std::to_string(start) + ".." +
                                      std::to_string(last) +
                                      " exceed 8 decimal digits");
        }
    }
    std::vector<Record> records;
    records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const value_t key = start + i;
        records.push_back({key, render_key(key), std::string(fill_name)});
    }
    return Dataset(std::move(records), start);
}

Index Index::build(const Dataset& dataset, KeyRepr repr, IndexKind kind) {
    if (dataset.empty()) {
        raise(errc::empty_input, "cannot index an empty dataset");
    }
    Index idx;
    idx.repr_ = repr;
    idx.kind_ = kind;
    idx.size_ = dataset.size();

    const auto& records = dataset.records();
    if (repr == KeyRepr::string_key) {
        idx.str_keys_.reserve(records.size());
        for (const auto& r : records) {
            idx.str_keys_.push_back(r.sid_text);
        }
    } else {
        idx.int_keys_.reserve(records.size());
        for (const auto& r : records) {
            idx.int_keys_.push_back(r.sid_value);
        }
    }

    if (kind == IndexKind::sorted) {
        idx.positions_.resize(records.size());
        std::iota(idx.positions_.begin(), idx.positions_.end(), 0u);
        if (repr == KeyRepr::string_key) {
            std::sort(idx.positions_.begin(), idx.positions_.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                          return idx.str_keys_[a] < idx.str_keys_[b];
                      });
            std::vector<std::string> sorted;
            sorted.reserve(records.size());
            for (auto p : idx.positions_) {
                sorted.push_back(idx.str_keys_[p]);
            }
            idx.str_keys_ = std::move(sorted);
        } else {
            std::sort(idx.positions_.begin(), idx.positions_.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                          return idx.int_keys_[a] < idx.int_keys_[b];
                      });
            std::vector<value_t> sorted;
            sorted.reserve(records.size());
            for (auto p : idx.positions_) {
                sorted.push_back(idx.int_keys_[p]);
            }
            idx.int_keys_ = std::move(sorted);
        }
    } else if (kind == IndexKind::hash) {
        const std::size_t buckets = std::bit_ceil(records.size() * 2);
        idx.bucket_mask_ = buckets - 1;
        idx.bucket_head_.assign(buckets, npos32);
        idx.chain_next_.assign(records.size(), npos32);
        for (std::uint32_t i = 0; i < records.size(); ++i) {
            const std::uint64_t h = repr == KeyRepr::string_key
                                        ? fnv1a(idx.str_keys_[i])
                                        : splitmix64(idx.int_keys_[i]);
            const std::size_t b = h & idx.bucket_mask_;
            idx.chain_next_[i] = idx.bucket_head_[b];
            idx.bucket_head_[b] = i;
        }
    }
    return idx;
}

std::optional<std::size_t> Index::find(std::string_view key, LookupCost& cost) const {
    if (repr_ != KeyRepr::string_key) {
        raise(errc::representation_mismatch,
              "string lookup against an integer-keyed index");
    }
    return find_str(key, cost);
}

std::optional<std::size_t> Index::find(value_t key, LookupCost& cost) const {
    if (repr_ != KeyRepr::integer_key) {
        raise(errc::representation_mismatch,
              "integer lookup against a string-keyed index");
    }
    return find_int(key, cost);
}

std::optional<std::size_t> Index::find_str(std::string_view key, LookupCost& cost) const {
    switch (kind_) {
        case IndexKind::scan: {
            for (std::size_t i = 0; i < str_keys_.size(); ++i) {
                if (compare_str(str_keys_[i], key, cost) == 0) {
                    return i;
                }
            }
            return std::nullopt;
        }
        case IndexKind::sorted: {
            std::size_t lo = 0;
            std::size_t hi = str_keys_.size();
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (compare_str(str_keys_[mid], key, cost) < 0) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            if (lo < str_keys_.size() && compare_str(str_keys_[lo], key, cost) == 0) {
                return positions_[lo];
            }
            return std::nullopt;
        }
        case IndexKind::hash: {
            std::uint32_t i = bucket_head_[fnv1a(key) & bucket_mask_];
            while (i != npos32) {
                if (compare_str(str_keys_[i], key, cost) == 0) {
                    return i;
                }
                i = chain_next_[i];
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> Index::find_int(value_t key, LookupCost& cost) const {
    switch (kind_) {
        case IndexKind::scan: {
            for (std::size_t i = 0; i < int_keys_.size(); ++i) {
                if (compare_int(int_keys_[i], key, cost) == 0) {
                    return i;
                }
            }
            return std::nullopt;
        }
        case IndexKind::sorted: {
            std::size_t lo = 0;
            std::size_t hi = int_keys_.size();
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                if (compare_int(int_keys_[mid], key, cost) < 0) {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            if (lo < int_keys_.size() && compare_int(int_keys_[lo], key, cost) == 0) {
                return positions_[lo];
            }
            return std::nullopt;
        }
        case IndexKind::hash: {
            std::uint32_t i = bucket_head_[splitmix64(key) & bucket_mask_];
            while (i != npos32) {
                if (compare_int(int_keys_[i], key, cost) == 0) {
                    return i;
                }
                i = chain_next_[i];
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

ClockFn steady_clock_ns() {
    return [] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now().time_since_epoch())
                .count());
    };
}

RunResult run_workload(const Index& index, const WorkloadSpec& workload,
                       const ClockFn& clock) {
    if (workload.key_repr != index.key_repr()) {
        raise(errc::representation_mismatch,
              std::string("workload keys are ") + std::string(to_string(workload.key_repr)) +
                  " but the index holds " + std::string(to_string(index.key_repr())) +
                  " keys");
    }
    if (workload.repetitions < 1) {
        raise(errc::value_out_of_range, "repetitions must be at least 1");
    }
    if (workload.target_key > max_decimal_value(record_key_digits)) {
        raise(errc::overflow, "target key exceeds 8 decimal digits");
    }

    RunResult result;
    LookupCost cost;
    const std::string target_text = render_key(workload.target_key);
    std::uint64_t total_ns = 0;

    auto timed = [&](auto&& lookup_once) {
        if (workload.timing == TimingMode::per_query) {
            for (std::uint64_t i = 0; i < workload.repetitions; ++i) {
                const std::uint64_t t0 = clock();
                const bool hit = lookup_once();
                const std::uint64_t t1 = clock();
                total_ns += t1 - t0;
                result.found_count += hit ? 1 : 0;
            }
        } else {
            const std::uint64_t t0 = clock();
            for (std::uint64_t i = 0; i < workload.repetitions; ++i) {
                result.found_count += lookup_once() ? 1 : 0;
            }
            const std::uint64_t t1 = clock();
            total_ns = t1 - t0;
        }
    };

    if (workload.key_repr == KeyRepr::string_key) {
        timed([&] { return index.find(std::string_view(target_text), cost).has_value(); });
    } else {
        timed([&] { return index.find(workload.target_key, cost).has_value(); });
    }

    result.total_seconds = static_cast<double>(total_ns) / 1e9;
    result.comparator_invocations = cost.comparisons;
    result.cost_units = cost.cost_units;
    return result;
}

BenchSummary compare_runs(std::vector<RunResult> runs_string,
                          std::vector<RunResult> runs_integer) {
    if (runs_string.empty() || runs_integer.empty()) {
        raise(errc::empty_input, "need at least one run per side");
    }
    if (runs_string.size() != runs_integer.size()) {
        raise(errc::run_count_mismatch,
              std::to_string(runs_string.size()) + " string runs vs " +
                  std::to_string(runs_integer.size()) + " integer runs");
    }
    BenchSummary summary;
    summary.runs_string = std::move(runs_string);
    summary.runs_integer = std::move(runs_integer);
    for (const auto& r : summary.runs_string) {
        summary.total_string_seconds += r.total_seconds;
    }
    for (const auto& r : summary.runs_integer) {
        summary.total_integer_seconds += r.total_seconds;
    }
    if (summary.total_string_seconds == 0.0) {
        raise(errc::zero_total_time, "string-side total time is zero");
    }
    summary.eta_percent = (summary.total_string_seconds - summary.total_integer_seconds) /
                          summary.total_string_seconds * 100.0;
    return summary;
}

std::vector<SummaryRow> summary_rows(const BenchSummary& summary) {
    std::vector<SummaryRow> rows;
    rows.reserve(summary.runs_string.size());
    for (std::size_t i = 0; i < summary.runs_string.size(); ++i) {
        rows.push_back({static_cast<unsigned>(i + 1),
                        summary.runs_string[i].total_seconds,
                        summary.runs_integer[i].total_seconds});
    }
    return rows;
}

std::string summary_csv(const BenchSummary& summary) {
    std::string out = "run,string_seconds,integer_seconds\n";
    char line[96];
    for (const auto& row : summary_rows(summary)) {
        std::snprintf(line, sizeof(line), "%u,%.12f,%.12f\n", row.run,
                      row.string_seconds, row.integer_seconds);
        out += line;
    }
    return out;
}

BenchSummary run_experiment(const ExperimentSpec& spec, const ClockFn& clock) {
    if (spec.runs < 1) {
        raise(errc::value_out_of_range, "run count must be at least 1");
    }
    const Dataset dataset = Dataset::generate(spec.start, spec.records, spec.fill_name);
    const Index str_index = Index::build(dataset, KeyRepr::string_key, spec.index_kind);
    const Index int_index = Index::build(dataset, KeyRepr::integer_key, spec.index_kind);

    // Untimed warm-up so first-touch effects stay out of run 1.
    {
        LookupCost sink;
        str_index.find(std::string_view(render_key(spec.target_key)), sink);
        int_index.find(spec.target_key, sink);
    }

    WorkloadSpec str_load{spec.target_key, spec.repetitions, spec.index_kind,
                          KeyRepr::string_key, spec.timing};
    WorkloadSpec int_load{spec.target_key, spec.repetitions, spec.index_kind,
                          KeyRepr::integer_key, spec.timing};

    std::vector<RunResult> runs_string;
    std::vector<RunResult> runs_integer;
    runs_string.reserve(spec.runs);
    runs_integer.reserve(spec.runs);
    // String and integer runs alternate, never interleave.
    for (unsigned r = 0; r < spec.runs; ++r) {
        runs_string.push_back(run_workload(str_index, str_load, clock));
        runs_integer.push_back(run_workload(int_index, int_load, clock));
    }
    return compare_runs(std::move(runs_string), std::move(runs_integer));
}

} // namespace idrep
