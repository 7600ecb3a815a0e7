/*
   Copyright 2026 The qclcd Authors

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

#include <random>

#include "qclcd/qclcd.hpp"

using namespace qclcd;

namespace {

FieldSpec field(std::uint64_t q) { return q == 4 ? FieldSpec::make(2, 2, {1, 1, 1}) : FieldSpec::prime(q); }

Poly random_poly(const FieldSpec& f, unsigned degree, std::mt19937_64& rng) {
    std::vector<Coeff> c(degree + 1);
    for (auto& x : c) x = rng() % f.order();
    c.back() = 1;
    return Poly(f, std::move(c));
}

QCCode table_code() {
    const FieldSpec f = field(2);
    return qc_new(f, 15, parse_poly(f, "x^2+x+1"), parse_poly(f, "x^12+x^10+x^9+x"),
                  parse_poly(f, "(x+1)(x^4+x+1)(x^4+x^3+1)(x^4+x^3+x^2+x+1)"));
}

QCCode ternary_code() {
    const FieldSpec f = field(3);
    return qc_new(f, 7, parse_poly(f, "x+2"), parse_poly(f, "2x^5+2x^4+x^3+2"),
                  parse_poly(f, "x^6+x^5+x^4+x^3+x^2+x+1"));
}

QCCode hermitian_code() {
    const FieldSpec f = field(4);
    return qc_new(f, 7, parse_poly(f, "1"), parse_poly(f, "w*x^5+w^2*x^4+w*x^3+x^2+x+1"),
                  parse_poly(f, "(x^3+x+1)(x^3+x^2+1)"));
}

}  // namespace

static void BM_Gcd(benchmark::State& state) {
    const FieldSpec f = field(static_cast<std::uint64_t>(state.range(0)));
    std::mt19937_64 rng(1);
    const auto deg = static_cast<unsigned>(state.range(1));
    const Poly a = random_poly(f, deg, rng), b = random_poly(f, deg - 1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Args({2, 64})->Args({3, 64})->Args({4, 64})->Args({2, 512});

static void BM_FactorXm(benchmark::State& state) {
    const FieldSpec f = field(static_cast<std::uint64_t>(state.range(0)));
    const auto m = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(factor_xm_minus_1(f, m));
}
BENCHMARK(BM_FactorXm)->Args({2, 63})->Args({2, 255})->Args({3, 80})->Args({4, 85});

static void BM_CheckEuclidean(benchmark::State& state) {
    const QCCode c = table_code();
    for (auto _ : state) benchmark::DoNotOptimize(check_euclidean(c));
}
BENCHMARK(BM_CheckEuclidean);

static void BM_HullEuclidean(benchmark::State& state) {
    const QCCode c = table_code();
    for (auto _ : state) benchmark::DoNotOptimize(hull_dim_euclidean(c));
}
BENCHMARK(BM_HullEuclidean);

static void BM_DistanceBinary(benchmark::State& state) {
    const QCCode c = table_code();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c, WeightKind::hamming));
    state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << 15) - 1));
}
BENCHMARK(BM_DistanceBinary)->Unit(benchmark::kMillisecond);

static void BM_DistanceTernary(benchmark::State& state) {
    const QCCode c = ternary_code();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c, WeightKind::hamming));
    state.SetItemsProcessed(state.iterations() * (2187 - 1));
}
BENCHMARK(BM_DistanceTernary)->Unit(benchmark::kMillisecond);

static void BM_DistanceQuaternary(benchmark::State& state) {
    const QCCode c = hermitian_code();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(c, WeightKind::hamming));
    state.SetItemsProcessed(state.iterations() * (65536 - 1));
}
BENCHMARK(BM_DistanceQuaternary)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
