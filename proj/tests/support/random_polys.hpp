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

#ifndef AHM_TESTS_SUPPORT_RANDOM_POLYS_HPP
#define AHM_TESTS_SUPPORT_RANDOM_POLYS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ahm/polyfactor.hpp"

namespace ahm::testing {

inline IntegerPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return IntegerPoly(std::move(c));
}

inline bool is_squarefree(const IntegerPoly& p) { return gcd(p, derivative(p)).degree() == 0; }

// Primitive squarefree polynomial of exactly the given degree.
inline IntegerPoly random_squarefree(std::mt19937_64& rng, int degree, long bound) {
  for (;;) {
    IntegerPoly p = primitive_part(random_poly(rng, degree, bound));
    if (degree == 0 || is_squarefree(p)) return p;
  }
}

// Equality up to a nonzero rational factor.
inline bool proportional(const IntegerPoly& a, const IntegerPoly& b) {
  return primitive_part(a) == primitive_part(b);
}

}  // namespace ahm::testing

#endif  // AHM_TESTS_SUPPORT_RANDOM_POLYS_HPP
