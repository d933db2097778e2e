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

#include "ahm/ahm_eval.hpp"
#include "ahm/modforms.hpp"

namespace {

ahm::BigComplex sample_tau(const ahm::PrecisionContext& ctx) {
  const mpfr_prec_t w = ctx.working_bits();
  return {ahm::BigFloat::parse("0.25", w), ahm::BigFloat::parse("1.1", w)};
}

void BM_EvalJChi(benchmark::State& state) {
  ahm::PrecisionContext ctx{static_cast<int>(state.range(0)), 32, 16384};
  const ahm::BigComplex tau = sample_tau(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ahm::eval_j_chi(tau, ctx));
}
BENCHMARK(BM_EvalJChi)->RangeMultiplier(2)->Range(256, 4096);

void BM_EvalRationalFunction(benchmark::State& state) {
  ahm::PrecisionContext ctx{static_cast<int>(state.range(0)), 32, 16384};
  const ahm::BigComplex tau = sample_tau(ctx);
  const auto f = ahm::parse_rational_function("(3*j*chi + 1/2)/(j - 1728)");
  for (auto _ : state) benchmark::DoNotOptimize(ahm::eval_f(f, tau, ctx));
}
BENCHMARK(BM_EvalRationalFunction)->RangeMultiplier(4)->Range(256, 4096);

void BM_Jacobian(benchmark::State& state) {
  ahm::PrecisionContext ctx;
  const ahm::BigComplex tau = sample_tau(ctx);
  const auto f = ahm::RationalFunction2::chi();
  for (auto _ : state) benchmark::DoNotOptimize(ahm::jacobian(f, tau, ctx));
}
BENCHMARK(BM_Jacobian);

}  // namespace
