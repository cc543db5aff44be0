// SPDX-License-Identifier: Apache-2.0
//
// thzrf - performance analysis of mixed THz-RF dual-hop relay links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Serial reference vs OpenMP Monte Carlo kernels at the baseline scenario.

#include "thzrf/config.hpp"
#include "thzrf/mc.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace thzrf;

namespace
{

const perf::Scenario &baseline()
{
    static const perf::Scenario s = [] {
        std::istringstream in(R"(
            thz_frequency_hz = 275e9
            thz_distance_m = 20
            thz_tx_gain_dbi = 55
            thz_rx_gain_dbi = 55
            temperature_k = 296
            humidity_percent = 50
            pressure_pa = 101325
            alpha = 1
            mu = 2
            h_hat_f = 1
            sigma_s_mm = 10
            aperture_radius_m = 0.02
            beam_footprint_m = 0.02
            rf_frequency_hz = 800e6
            rf_tx_gain_dbi = 0
            rf_rx_gain_dbi = 0
            rf_distance_m = 1
            rf_path_loss_exponent = 2
            es_over_no1_db = 20
            er_over_no2_db = 50
            gamma_th_db = 0)");
        return cli::build_scenario(cli::scenario_values(cli::read_key_values(in, "bench"), "bench"));
    }();
    return s;
}

void BM_OpSerial(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::reference::simulate_op(baseline(), n, mc::RngSeed{1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OpParallel(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::simulate_op(baseline(), n, mc::RngSeed{1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SerSerial(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto mod = perf::parse_modulation("mqam:16");
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::reference::simulate_ser(baseline(), mod, n, mc::RngSeed{1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SerParallel(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto mod = perf::parse_modulation("mqam:16");
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::simulate_ser(baseline(), mod, n, mc::RngSeed{1}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_OpSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SerSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
