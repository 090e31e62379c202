// Copyright 2026 The Subzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "subzero/bounds.hpp"
#include "subzero/catalog.hpp"
#include "subzero/engine.hpp"
#include "subzero/oracle.hpp"
#include "subzero/realizer.hpp"
#include "subzero/runcheck.hpp"

namespace {

using namespace subzero;

void BM_SaturateL3(benchmark::State& state) {
    const auto a = catalog::make_l3();
    const EngineOptions options{static_cast<std::uint32_t>(state.range(0))};
    std::size_t entries = 0;
    for (auto _ : state) {
        const auto s = saturate(a, options);
        entries = s.entries().size();
        benchmark::DoNotOptimize(entries);
    }
    state.counters["entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_SaturateL3)->Arg(1)->Arg(2)->Arg(3);

void BM_SaturateRandom(benchmark::State& state) {
    const oracle::RandomAutomatonParams params{static_cast<std::uint32_t>(state.range(0)), 2,
                                               static_cast<std::uint32_t>(3 * state.range(0)), 0.6, 0.3};
    std::vector<SubzeroAutomaton> corpus;
    for (std::uint64_t seed = 0; seed < 16; ++seed) corpus.push_back(oracle::random_automaton(params, seed));
    for (auto _ : state) {
        for (const auto& a : corpus) benchmark::DoNotOptimize(saturate(a).entries().size());
    }
}
BENCHMARK(BM_SaturateRandom)->Arg(3)->Arg(4)->Arg(5);

void BM_DecideExample12(benchmark::State& state) {
    const auto a = catalog::make_example12();
    const StateId q = *a.find_state("q");
    for (auto _ : state) benchmark::DoNotOptimize(decide_regular_emptiness(a, q).nonempty);
}
BENCHMARK(BM_DecideExample12);

void BM_RealizeWitnesses(benchmark::State& state) {
    const auto a = catalog::make_finite_run_fragment();
    const auto s = saturate(a);
    std::vector<DerivationPtr> witnesses;
    for (std::size_t i = 0; i < s.entries().size(); ++i) witnesses.push_back(extract_entry_witness(s, i));
    for (auto _ : state) {
        for (const auto& w : witnesses) benchmark::DoNotOptimize(realize(a, *w).nodes.size());
    }
    state.counters["witnesses"] = static_cast<double>(witnesses.size());
}
BENCHMARK(BM_RealizeWitnesses);

void BM_ZeroMeasureExact(benchmark::State& state) {
    const auto nodes = static_cast<std::uint32_t>(state.range(0));
    std::vector<std::pair<SubzeroAutomaton, RunGraph>> corpus;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        auto a = oracle::random_automaton({4, 2, 8, 0.5, 0.5}, seed);
        auto g = oracle::random_run_graph(a, nodes, seed);
        corpus.emplace_back(std::move(a), std::move(g));
    }
    for (auto _ : state) {
        for (const auto& [a, g] : corpus) benchmark::DoNotOptimize(zero_measure_exact(a, g));
    }
}
BENCHMARK(BM_ZeroMeasureExact)->Arg(8)->Arg(32)->Arg(128);

void BM_BoundF(benchmark::State& state) {
    BoundParams p;
    p.size_q = 2;
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const auto n = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(bound_f(p, q, n).ok());
}
BENCHMARK(BM_BoundF)->Args({0, 100})->Args({1, 10})->Args({2, 2});

void BM_OracleEnumerate(benchmark::State& state) {
    const auto a = catalog::make_example12();
    for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_all_derivations(a, {8, 2, 3}).size());
}
BENCHMARK(BM_OracleEnumerate);

}  // namespace

BENCHMARK_MAIN();
