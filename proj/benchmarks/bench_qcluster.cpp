// Copyright 2026 The qcluster Authors
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

#include <vector>

#include "qcluster/qcluster.hpp"

namespace {

using namespace qcluster;

QuantumSeed rank3() {
  static const std::vector<std::int64_t> d{1, 1, 1};
  return principal_seed(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, d);
}

QuantumSeed rank3_weighted() {
  static const std::vector<std::int64_t> d{1, 3, 1};
  return principal_seed(IntMatrix{{0, 3, -1}, {-1, 0, 1}, {1, -3, 0}}, d);
}

void BM_QBinom(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(q_binom(n, n / 2, 2));
}
BENCHMARK(BM_QBinom)->Arg(8)->Arg(16)->Arg(32);

void BM_QBinomByFactorials(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(q_binom_by_factorials(n, n / 2, 2));
}
BENCHMARK(BM_QBinomByFactorials)->Arg(8)->Arg(16)->Arg(32);

void BM_TorusPower(benchmark::State& state) {
  const auto s = rank3();
  const TorusElem y = mutated_variable(s, 0);
  const auto t = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(y.pow(t));
}
BENCHMARK(BM_TorusPower)->Arg(2)->Arg(4)->Arg(8);

void BM_Mutate(benchmark::State& state) {
  const auto s = rank3();
  for (auto _ : state) benchmark::DoNotOptimize(mutate(s, 1));
}
BENCHMARK(BM_Mutate);

void BM_SerreSuite(benchmark::State& state) {
  const auto s = rank3();
  for (auto _ : state) benchmark::DoNotOptimize(quantum_group_suite(s));
}
BENCHMARK(BM_SerreSuite)->Unit(benchmark::kMillisecond);

void BM_HigherOrder(benchmark::State& state) {
  const auto s = rank3_weighted();
  const auto l = state.range(0);
  for (auto _ : state) {
    RelationEngine e(s);
    benchmark::DoNotOptimize(e.higher_verify(0, 1, l, 3 * l));
  }
}
BENCHMARK(BM_HigherOrder)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
