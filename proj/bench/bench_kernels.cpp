/*
 * Copyright 2026 The tri3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Serial reference kernels against the OpenMP kernels on the 6x6 preset.

#include <benchmark/benchmark.h>

#include <tri3/generators.hpp>
#include <tri3/kernels.hpp>

using namespace tri3;

namespace {

struct Fixture {
    std::shared_ptr<const TriRing3> t = preset_example21(2);
    RingFacts facts = RingFacts::compute(*t);
    EndoMap phi = gen_mld(*t, facts, MldRecipe{1});
    kernels::DenseView view = kernels::view_of(*t);
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

template <Exec E>
void BM_mld(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::mld(f.view, f.phi.table().data(), 5, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.view.n * f.view.n));
}

template <Exec E>
void BM_additive(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::additive(f.view, f.phi.table().data(), 5, E));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.view.n * f.view.n));
}

template <Exec E>
void BM_center(benchmark::State& state) {
    const auto& f = fixture();
    std::vector<std::uint8_t> out(f.view.n);
    for (auto _ : state) {
        kernels::center_flags(f.view, f.t->zero(), out.data(), E);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.view.n * f.view.n));
}

template <Exec E>
void BM_commutators(benchmark::State& state) {
    const auto& f = fixture();
    std::vector<std::uint8_t> out(f.view.n);
    for (auto _ : state) {
        kernels::commutator_flags(f.view, out.data(), E);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.view.n * f.view.n));
}

} // namespace

BENCHMARK_TEMPLATE(BM_mld, Exec::Serial)->Name("mld/serial")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_mld, Exec::Parallel)->Name("mld/omp")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_additive, Exec::Serial)->Name("additive/serial")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_additive, Exec::Parallel)->Name("additive/omp")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_center, Exec::Serial)->Name("center/serial")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_center, Exec::Parallel)->Name("center/omp")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_commutators, Exec::Serial)->Name("commutators/serial")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_commutators, Exec::Parallel)->Name("commutators/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
