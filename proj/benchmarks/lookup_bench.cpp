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
#include <benchmark/benchmark.h>

#include "idrep/bench.hpp"
#include "idrep/id_schema.hpp"

using namespace idrep;

namespace {

// Worst-case lookup: the target key sits at the end of the insertion order.
template <KeyRepr Repr, IndexKind Kind>
void BM_Lookup(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    const auto dataset = Dataset::generate(Dataset::default_start, count, "n");
    const auto index = Index::build(dataset, Repr, Kind);
    const value_t target = Dataset::default_start + count - 1;
    const std::string target_text = dataset.records().back().sid_text;

    LookupCost cost;
    for (auto _ : state) {
        if constexpr (Repr == KeyRepr::string_key) {
            benchmark::DoNotOptimize(index.find(std::string_view(target_text), cost));
        } else {
            benchmark::DoNotOptimize(index.find(target, cost));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

void BM_Pack(benchmark::State& state) {
    const auto schema = IdSchema::serial("id8", 8);
    value_t v = 10100001;
    for (auto _ : state) {
        const auto id = schema.unpack(v);
        benchmark::DoNotOptimize(schema.pack(id));
        v = v == 99999999 ? 1 : v + 1;
    }
}

} // namespace

BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::string_key, IndexKind::scan)
    ->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::integer_key, IndexKind::scan)
    ->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::string_key, IndexKind::sorted)
    ->Arg(100000);
BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::integer_key, IndexKind::sorted)
    ->Arg(100000);
BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::string_key, IndexKind::hash)
    ->Arg(100000);
BENCHMARK_TEMPLATE(BM_Lookup, KeyRepr::integer_key, IndexKind::hash)
    ->Arg(100000);
BENCHMARK(BM_Pack);

BENCHMARK_MAIN();
