// Copyright 2026 The qwalk Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Serial reference kernels against their OpenMP counterparts.
// Run with QWALK_THREADS or OMP_NUM_THREADS to pick the thread count.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>
#include <vector>

#include <omp.h>

#include "qwalk/index_map.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/probe_opt.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;
namespace k = qwalk::kernels;

namespace {

struct Grid {
    int d, rows;
    std::vector<int> shifts;
    std::vector<Complex> psi, dpsi, out, dout, c, dc;
    k::StepRange range;

    Grid(int dimension, int horizon) : d(dimension) {
        const CoinIndexMap map(dimension);
        shifts.assign(map.shifts().begin(), map.shifts().end());
        rows = 2 * map.max_shift() * horizon + 1;
        std::mt19937_64 rng(1);
        std::normal_distribution<double> n;
        auto fill = [&](std::vector<Complex>& v, std::size_t size) {
            v.resize(size);
            for (auto& z : v)
                z = {n(rng), n(rng)};
        };
        fill(psi, static_cast<std::size_t>(rows) * d);
        fill(dpsi, psi.size());
        out.resize(psi.size());
        dout.resize(psi.size());
        const CoinOperator coin = rotation_coin(dimension, Axis::y, 0.7);
        c = row_major(coin.matrix);
        dc = row_major(coin.derivative);
        // Sources span the interior so every shifted target stays on the grid.
        range = {map.max_shift(), rows - 1 - map.max_shift(), map.max_shift()};
    }
};

template <bool Parallel>
void BM_ShiftCoin(benchmark::State& state) {
    Grid g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::shift_coin_omp(g.psi, g.out, g.d, g.shifts, g.c, g.range);
        else
            k::shift_coin_serial(g.psi, g.out, g.d, g.shifts, g.c, g.range);
        benchmark::DoNotOptimize(g.out.data());
    }
    state.SetItemsProcessed(state.iterations() * g.rows * g.d);
}

template <bool Parallel>
void BM_DerivativeStep(benchmark::State& state) {
    Grid g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        if constexpr (Parallel)
            k::derivative_step_omp(g.psi, g.dpsi, g.out, g.dout, g.d, g.shifts, g.c, g.dc, g.range);
        else
            k::derivative_step_serial(g.psi, g.dpsi, g.out, g.dout, g.d, g.shifts, g.c, g.dc, g.range);
        benchmark::DoNotOptimize(g.dout.data());
    }
    state.SetItemsProcessed(state.iterations() * g.rows * g.d);
}

template <Execution Exec>
void BM_Lattice(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ProbeObjective objective({CoinFamily::rotation(d, Axis::x), 1.1, static_cast<int>(state.range(1))});
    const Lattice lattice = default_lattice(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_lattice(objective, lattice, Exec));
    state.SetItemsProcessed(state.iterations() * lattice_size(d, lattice));
}

void step_args(benchmark::internal::Benchmark* b) {
    for (int d : {2, 3, 4})
        for (int horizon : {100, 1000, 10000})
            b->Args({d, horizon});
}

} // namespace

BENCHMARK(BM_ShiftCoin<false>)->Name("shift_coin/serial")->Apply(step_args);
BENCHMARK(BM_ShiftCoin<true>)->Name("shift_coin/omp")->Apply(step_args);
BENCHMARK(BM_DerivativeStep<false>)->Name("derivative_step/serial")->Apply(step_args);
BENCHMARK(BM_DerivativeStep<true>)->Name("derivative_step/omp")->Apply(step_args);
BENCHMARK(BM_Lattice<Execution::serial>)->Name("lattice/serial")->Args({2, 10})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lattice<Execution::parallel>)->Name("lattice/omp")->Args({2, 10})->Args({3, 5})->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    if (const char* env = std::getenv("QWALK_THREADS"))
        omp_set_num_threads(std::atoi(env));
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
