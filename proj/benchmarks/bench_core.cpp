/*
   Copyright 2026 The polya-cert Authors

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

#include <benchmark/benchmark.h>

#include "polya/bounds.hpp"
#include "polya/expansion.hpp"
#include "polya/lemma_lab.hpp"
#include "polya/positivity.hpp"
#include "polya/sampling.hpp"

namespace {

void BM_ScaledSumOnGrid(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    unsigned k = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(polya::scaled_sum_on_grid(k, 2000, d, 100));
        k = k % 1999 + 1;
    }
}
BENCHMARK(BM_ScaledSumOnGrid)->Arg(3)->Arg(4)->Arg(5);

void BM_ScaledSumRational(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const polya::Rational c(mpz_class(701), mpz_class(2000));
    for (auto _ : state) benchmark::DoNotOptimize(polya::scaled_sum(c, d, 100));
}
BENCHMARK(BM_ScaledSumRational)->Arg(3)->Arg(4)->Arg(5);

void BM_ComputeLambda(benchmark::State& state) {
    polya::PolynomialSampler rng(42);
    const polya::Polynomial p = rng.positive_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(polya::compute_lambda(p));
}
BENCHMARK(BM_ComputeLambda)->DenseRange(2, 6);

void BM_MinimalM(benchmark::State& state) {
    polya::PolynomialSampler rng(43);
    const polya::Polynomial p = rng.positive_polynomial(static_cast<int>(state.range(0)));
    const auto inv = polya::compute_invariants(p);
    const unsigned cap = polya::default_cap(polya::powers_reznick_threshold(p.degree(), inv.ratio_hi));
    for (auto _ : state) benchmark::DoNotOptimize(polya::minimal_m(p, cap));
}
BENCHMARK(BM_MinimalM)->DenseRange(2, 5);

void BM_SweepCubic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polya::sweep_lemma(3, 50, 200, 1));
}
BENCHMARK(BM_SweepCubic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
