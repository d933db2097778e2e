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

#ifndef AHM_SRC_MODP_POLY_HPP
#define AHM_SRC_MODP_POLY_HPP

// Dense polynomials over F_p for word-sized odd primes p < 2^32.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ahm/polyfactor.hpp"

namespace ahm::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, no trailing zeros

bool is_prime(u64 n);
u64 next_prime(u64 n);  // smallest prime >= n

u64 mul(u64 a, u64 b, u64 p);
u64 inv(u64 a, u64 p);

int deg(const Poly& a);
void trim(Poly& a);
Poly reduce(const IntegerPoly& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly derivative(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p);

// s*a + t*b = 1 for coprime a, b.
struct Bezout {
  Poly s;
  Poly t;
};
Bezout bezout(const Poly& a, const Poly& b, u64 p);

bool is_squarefree(const Poly& f, u64 p);

// (d, product of the monic irreducible factors of degree d) for a monic
// squarefree f.
std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f, u64 p);
// Factor degrees of a monic squarefree f, ascending.
std::vector<int> factor_degrees(const Poly& f, u64 p);
// Monic irreducible factors of a monic squarefree f whose irreducible
// factors all have degree d.
std::vector<Poly> equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng);
std::vector<Poly> factor_squarefree_monic(const Poly& f, u64 p);

}  // namespace ahm::modp

#endif  // AHM_SRC_MODP_POLY_HPP
