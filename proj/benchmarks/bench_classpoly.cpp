// Copyright 2026 The ahmclass Authors
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

#include "ahm/analysis.hpp"
#include "ahm/classpoly.hpp"

namespace {

void BM_ExactClassPolyChi(benchmark::State& state) {
  const ahm::Discriminant delta(state.range(0));
  const auto f = ahm::RationalFunction2::chi();
  for (auto _ : state) benchmark::DoNotOptimize(ahm::exact_class_poly(f, delta, ahm::PrecisionContext{}));
}
BENCHMARK(BM_ExactClassPolyChi)->Arg(-23)->Arg(-84)->Arg(-199)->Arg(-399)->Unit(benchmark::kMillisecond);

void BM_ClassPolyReportJ(benchmark::State& state) {
  const ahm::Discriminant delta(state.range(0));
  const auto f = ahm::RationalFunction2::j();
  for (auto _ : state) benchmark::DoNotOptimize(ahm::class_poly_report(f, delta, ahm::PrecisionContext{}));
}
BENCHMARK(BM_ClassPolyReportJ)->Arg(-23)->Arg(-399)->Arg(-1999)->Unit(benchmark::kMillisecond);

void BM_GaloisCheck(benchmark::State& state) {
  const ahm::Discriminant delta(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ahm::galois_interpolation_check(delta, ahm::PrecisionContext{}));
}
BENCHMARK(BM_GaloisCheck)->Arg(-23)->Arg(-199)->Arg(-399)->Unit(benchmark::kMillisecond);

void BM_SweepChi(benchmark::State& state) {
  const auto f = ahm::RationalFunction2::chi();
  ahm::SweepOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ahm::sweep(f, -400, -3, {true}, ahm::PrecisionContext{}, opts));
  }
}
BENCHMARK(BM_SweepChi)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
