// Copyright 2026 The ampshape Authors.
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

#include <random>
#include <vector>

#include "ampshape/combinatorics.hpp"
#include "ampshape/lut.hpp"
#include "ampshape/ranking.hpp"
#include "ampshape/shapers.hpp"

using namespace ampshape;

namespace {

const AveragePmf kPmf{{0.4, 0.3, 0.2, 0.1}};

Composition bench_composition(int n) { return ccdm_composition_from_pmf(kPmf, n); }

// Deterministic ranks spread over [0, limit).
std::vector<BigNat> bench_ranks(const BigNat& limit, int count) {
    std::mt19937_64 rng(12345);
    const int bits = limit == 1 ? 1 : floor_log2(limit) + 1;
    std::vector<BigNat> ranks;
    ranks.reserve(count);
    while (static_cast<int>(ranks.size()) < count) {
        BigNat r = 0;
        for (int b = 0; b < bits; b += 64) {
            r <<= 64;
            r |= rng();
        }
        r %= limit;
        ranks.push_back(std::move(r));
    }
    return ranks;
}

void BM_MrMap(benchmark::State& state) {
    const Composition c = bench_composition(static_cast<int>(state.range(0)));
    const auto ranks = bench_ranks(multinom(c), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mr_map(c, ranks[i++ % ranks.size()]));
    }
    state.SetItemsProcessed(state.iterations() * c.n());
}
BENCHMARK(BM_MrMap)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_MrMapWithLut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Composition c = bench_composition(n);
    const CoefficientLUT lut = build_mr_lut(n, Alphabet());
    const auto ranks = bench_ranks(multinom(c), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mr_map(c, ranks[i++ % ranks.size()], &lut));
    }
    state.SetItemsProcessed(state.iterations() * c.n());
}
BENCHMARK(BM_MrMapWithLut)->Arg(25)->Arg(50)->Arg(100);

void BM_MrDemap(benchmark::State& state) {
    const Composition c = bench_composition(static_cast<int>(state.range(0)));
    const AmplitudeSequence s = mr_map(c, multinom(c) / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mr_demap(c, s));
    }
    state.SetItemsProcessed(state.iterations() * c.n());
}
BENCHMARK(BM_MrDemap)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_SrUnrank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int w = (2 * n) / 5;
    const auto ranks = bench_ranks(binom(n, w), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sr_unrank_positions(n, w, ranks[i++ % ranks.size()]));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SrUnrank)->Arg(50)->Arg(100)->Arg(200);

void BM_SrUnrankWithLut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int w = (2 * n) / 5;
    const CoefficientLUT lut = build_sr_lut(n);
    const auto ranks = bench_ranks(binom(n, w), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sr_unrank_positions(n, w, ranks[i++ % ranks.size()], &lut));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SrUnrankWithLut)->Arg(50)->Arg(100)->Arg(200);

void BM_PaMap(benchmark::State& state) {
    const Composition c = bench_composition(static_cast<int>(state.range(0)));
    const int bits = pa_payload_bits(c);
    const auto ranks = bench_ranks(pow2(bits), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pa_map(c, BitWord(bits, ranks[i++ % ranks.size()])));
    }
    state.SetItemsProcessed(state.iterations() * c.n());
}
BENCHMARK(BM_PaMap)->Arg(50)->Arg(100);

void BM_HcssShape(benchmark::State& state) {
    const ShaperCodebook cb = build_hcss(20, Alphabet(), 30, Engine::Mr);
    const auto ranks = bench_ranks(pow2(30), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(shape(cb, BitWord(30, ranks[i++ % ranks.size()])));
    }
    state.SetItemsProcessed(state.iterations() * cb.n());
}
BENCHMARK(BM_HcssShape);

void BM_HcssDeshape(benchmark::State& state) {
    const ShaperCodebook cb = build_hcss(20, Alphabet(), 30, Engine::Mr);
    std::vector<AmplitudeSequence> blocks;
    for (const BigNat& r : bench_ranks(pow2(30), 64)) blocks.push_back(shape(cb, BitWord(30, r)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deshape(cb, blocks[i++ % blocks.size()]));
    }
    state.SetItemsProcessed(state.iterations() * cb.n());
}
BENCHMARK(BM_HcssDeshape);

void BM_BuildHcss(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = (3 * n) / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hcss(n, Alphabet(), k, Engine::Mr));
    }
}
BENCHMARK(BM_BuildHcss)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_BuildMrLut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_mr_lut(n, Alphabet()));
    }
}
BENCHMARK(BM_BuildMrLut)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
