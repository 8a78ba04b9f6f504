/*
   Copyright 2025 The reflektor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "reflektor/group.hpp"
#include "reflektor/refl.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace reflektor;

namespace {

const char* const kPresets[] = {"h3_coxeter", "g24_334", "gnn3:6:1", "g27_a", "h4_geometric"};

template <ClosureResult (*Fn)(const std::vector<FieldMatrix>&, const ClosureOptions&)>
void run_closure(benchmark::State& state) {
    const ReflectionRep rep = preset(kPresets[state.range(0)]);
    const int threads = static_cast<int>(state.range(1));
    omp_set_num_threads(threads);
    std::size_t order = 0;
    for (auto _ : state) {
        const ClosureResult r = Fn(rep.generators, {});
        order = r.order;
        benchmark::DoNotOptimize(order);
    }
    state.SetLabel(rep.name);
    state.counters["order"] = static_cast<double>(order);
    state.counters["elements/s"] = benchmark::Counter(static_cast<double>(order), benchmark::Counter::kIsIterationInvariantRate);
}

void presets_serial(benchmark::internal::Benchmark* b) {
    for (long i = 0; i < 5; ++i) b->Args({i, 1});
}

void presets_parallel(benchmark::internal::Benchmark* b) {
    const int max_threads = omp_get_max_threads();
    for (long i = 0; i < 5; ++i)
        for (int t = 1; t <= max_threads; t *= 2) b->Args({i, t});
}

}  // namespace

BENCHMARK(run_closure<closure_serial>)->Name("closure_serial")->Apply(presets_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(run_closure<closure_parallel>)->Name("closure_parallel")->Apply(presets_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
