// Copyright 2026 The qentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qentropy/entropy.hpp"
#include "qentropy/kholevo.hpp"
#include "qentropy/measurement.hpp"
#include "qentropy/random.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

SubsystemLayout square(std::size_t d) {
    return SubsystemLayout({{"A", d}, {"B", d}});
}

void BM_SpectralDecompose(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = random_density(square(d), d * d, 1u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_decompose(rho.op()));
    }
}
BENCHMARK(BM_SpectralDecompose)->Arg(2)->Arg(4)->Arg(8);

void BM_PartialTrace(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = random_density(SubsystemLayout({{"A", d}, {"B", d}, {"C", d}}), d, 2u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho.op(), {"A", "C"}));
    }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(3)->Arg(4);

void BM_ConditionalAmplitudeOperator(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto rho = random_density(square(d), d, 3u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conditional_amplitude_operator(rho, {"B"}));
    }
}
BENCHMARK(BM_ConditionalAmplitudeOperator)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_TrotterApproximant(benchmark::State &state) {
    const auto rho = random_density(square(2), 4, 4u);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(trotter_approximant(rho, {"B"}, n));
    }
}
BENCHMARK(BM_TrotterApproximant)->Arg(16)->Arg(1024);

void BM_MeasureEnsemble(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    std::vector<DensityOperator> signals;
    for (int k = 0; k < 4; ++k) {
        signals.push_back(random_density(SubsystemLayout({{"Q", d}}), d, rng));
    }
    const PreparationEnsemble ens(ClassicalDistribution({0.1, 0.2, 0.3, 0.4}), std::move(signals));
    const MeasurementModel model(Observable("r", haar_unitary(d, rng)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_ensemble(ens, model));
    }
}
BENCHMARK(BM_MeasureEnsemble)->Arg(2)->Arg(3)->Arg(4);

void BM_TernaryDiagram(benchmark::State &state) {
    const auto rho = random_pure_state(SubsystemLayout::qubits({"A", "B", "C"}), 6u).density();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ternary_diagram(rho, {"A"}, {"B"}, {"C"}));
    }
}
BENCHMARK(BM_TernaryDiagram);

}  // namespace
BENCHMARK_MAIN();
