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

#include <random>

#include "ahm/polyfactor.hpp"

namespace {

ahm::IntegerPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() = 1;
  return ahm::IntegerPoly(std::move(c));
}

// Hilbert class polynomial of -84: the sieve cannot decide it.
ahm::IntegerPoly hilbert84() {
  return ahm::IntegerPoly(std::vector<mpz_class>{mpz_class("-5133201653210986057826304"),
                                                 mpz_class("88821246589810089394176"),
                                                 mpz_class("-5663679223085309952"), mpz_class("-3196800946944"), 1});
}

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const ahm::IntegerPoly c = random_poly(rng, n / 2);
  const ahm::IntegerPoly a = random_poly(rng, n) * c, b = random_poly(rng, n) * c;
  for (auto _ : state) benchmark::DoNotOptimize(ahm::gcd(a, b));
}
BENCHMARK(BM_Gcd)->RangeMultiplier(2)->Range(4, 32);

void BM_DegreePatternSieve(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ahm::IntegerPoly p = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ahm::degree_pattern_sieve(p));
}
BENCHMARK(BM_DegreePatternSieve)->RangeMultiplier(2)->Range(4, 64);

void BM_FullFactorizationHilbert84(benchmark::State& state) {
  const ahm::IntegerPoly p = hilbert84();
  for (auto _ : state) benchmark::DoNotOptimize(ahm::full_factorization_certificate(p));
}
BENCHMARK(BM_FullFactorizationHilbert84);

void BM_FactorProduct(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const ahm::IntegerPoly p = random_poly(rng, n) * random_poly(rng, n) * random_poly(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(ahm::factor_squarefree(p));
}
BENCHMARK(BM_FactorProduct)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
