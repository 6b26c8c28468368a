// Copyright 2026 The qcompare Authors
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

#include "qcompare/qcompare.hpp"

namespace {

using namespace qcompare;

HermitianOperator random_hermitian(std::size_t n) {
  std::mt19937_64 gen(n);
  std::normal_distribution<double> dist;
  ComplexMatrix a(n, n);
  for (Complex& z : a.entries()) z = {dist(gen), dist(gen)};
  return HermitianOperator((a + a.adjoint()) * Complex(0.5));
}

void BM_HermEig(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(m));
}
BENCHMARK(BM_HermEig)->Arg(4)->Arg(16)->Arg(36)->Arg(81);

void BM_AveragedChoi(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const ComparisonDims dims{d, d, 2};
  for (auto _ : state) benchmark::DoNotOptimize(avg_choi_channels_same(dims));
}
BENCHMARK(BM_AveragedChoi)->DenseRange(2, 3);

void BM_DiamondBound(benchmark::State& state) {
  const auto d_in = static_cast<std::size_t>(state.range(0));
  const auto d_out = static_cast<std::size_t>(state.range(1));
  const ChoiMatrix j = diff_operator(OperationKind::channel, {d_in, d_out, 2});
  for (auto _ : state) benchmark::DoNotOptimize(diamond_bound(j));
}
BENCHMARK(BM_DiamondBound)->Args({2, 2})->Args({3, 2})->Args({3, 3});

void BM_HaarIsometry(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  RngStream rng(RngSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(haar_isometry({d, d, 2}, rng));
}
BENCHMARK(BM_HaarIsometry)->Arg(2)->Arg(4)->Arg(8);

void BM_MonteCarloSuccess(benchmark::State& state) {
  McOptions options;
  options.threads = 1;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_success(OperationKind::channel, {2, 2, 2}, n, RngSeed{42}, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloSuccess)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_LpBruteForce(benchmark::State& state) {
  const LpCoefficients c = coefficients(OperationKind::povm, 3, 2);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_brute(c, 0.2, grid));
}
BENCHMARK(BM_LpBruteForce)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
