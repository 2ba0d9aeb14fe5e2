// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "hnpoly/hnpoly.hpp"

namespace {

using hnpoly::HNData;
using hnpoly::Rational;

HNData span100() {
  return HNData({Rational(50), Rational(17), Rational(3), Rational(-20), Rational(-50)},
                {1, 2, 3, 2, 1});
}

HNData fractional() {
  return HNData({Rational::parse("5/2"), Rational::parse("1/3"), Rational::parse("-7/4")},
                {2, 3, 1});
}

void BM_DistributionSpan100(benchmark::State& state) {
  HNData data = span100();
  auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnpoly::distribution(data, m));
  }
}
BENCHMARK(BM_DistributionSpan100)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_ExactTailFractional(benchmark::State& state) {
  HNData data = fractional();
  auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnpoly::exact_tail(hnpoly::distribution(data, m), Rational(0)));
  }
}
BENCHMARK(BM_ExactTailFractional)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_CountS(benchmark::State& state) {
  HNData data = span100();
  auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnpoly::count_S(data, m, Rational(0)));
  }
}
BENCHMARK(BM_CountS)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_OrderedTuples(benchmark::State& state) {
  HNData data = fractional();
  auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnpoly::ordered_tuples(data, m).collect());
  }
}
BENCHMARK(BM_OrderedTuples)->DenseRange(4, 10, 3);

void BM_SampleWalk(benchmark::State& state) {
  HNData data = fractional();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnpoly::sample_walk(data, 64, 10000, 7));
  }
}
BENCHMARK(BM_SampleWalk)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
