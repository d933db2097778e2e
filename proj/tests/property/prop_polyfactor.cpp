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

#include <doctest.h>

#include <random>

#include "ahm/polyfactor.hpp"
#include "support/brute_force.hpp"
#include "support/random_polys.hpp"

using namespace ahm;
using namespace ahm::testing;

TEST_SUITE("polyfactor properties") {

TEST_CASE("gcd(h, h') * squarefree_part(h) = h up to content") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> deg(1, 4), mult(1, 3), parts(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    // Build h as a product of random factors with multiplicities.
    IntegerPoly h{1};
    const int n = parts(rng);
    for (int i = 0; i < n; ++i) h = h * pow(random_poly(rng, deg(rng), 9), static_cast<unsigned>(mult(rng)));
    CAPTURE(h.to_string());
    IntegerPoly g = gcd(h, derivative(h));
    IntegerPoly s = squarefree_part(h);
    CHECK(proportional(g * s, h));
    CHECK(is_squarefree(s));
  }
}

TEST_CASE("perfect power decomposition round-trips") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> deg(1, 8), expo(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    IntegerPoly p = random_squarefree(rng, deg(rng), 20);
    if (p.leading() < 0) p = -p;
    const int k = expo(rng);
    IntegerPoly h = pow(p, static_cast<unsigned>(k));
    CAPTURE(p.to_string());
    CAPTURE(k);
    PowerDecomposition d = perfect_power_decompose(h);
    // p itself may be a perfect power only if squarefree fails, which it does not.
    CHECK(d.exponent == k);
    CHECK(d.base == p);
    CHECK(pow(d.base, static_cast<unsigned>(d.exponent)) == h);
  }
}

TEST_CASE("irreducibility agrees with a brute-force factor search") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_int_distribution<long> coef(-50, 50);
  int reducible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = deg(rng);
    std::vector<long> c(static_cast<std::size_t>(n) + 1);
    for (long& x : c) x = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    // Plant factors in a third of the cases so both verdicts are exercised.
    if (trial % 3 == 0 && n >= 2) {
      std::uniform_int_distribution<long> small(-6, 6);
      auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = small(rng);
        return v;
      };
      std::vector<long> a{small(rng), nonzero()};
      std::vector<long> b(static_cast<std::size_t>(n - 1));
      for (long& x : b) x = small(rng);
      b.back() = nonzero();
      std::vector<long> prod(static_cast<std::size_t>(n) + 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) prod[i + k] += a[i] * b[k];
      c = prod;
    }
    std::vector<mpz_class> cz(c.begin(), c.end());
    IntegerPoly p(cz);
    if (p.degree() < 1) continue;
    const IntegerPoly prim = primitive_part(p);
    std::vector<long> pc;
    for (const mpz_class& x : prim.coeffs()) pc.push_back(x.get_si());
    const bool brute = brute_force_reducible(pc);
    CAPTURE(prim.to_string());
    const IrreducibilityCertificate cert = is_irreducible(prim);
    CHECK((cert.verdict == Verdict::reducible) == brute);
    if (cert.verdict == Verdict::reducible && cert.factor) {
      CHECK(cert.factor->degree() >= 1);
      CHECK(cert.factor->degree() < prim.degree());
      CHECK(try_divide(prim, *cert.factor).has_value());
    }
    reducible += brute;
  }
  CHECK(reducible > 50);
}

TEST_CASE("the sieve never contradicts full factorization") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> deg(2, 10), split(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    IntegerPoly p = random_squarefree(rng, deg(rng), 30);
    if (split(rng) == 0) {
      IntegerPoly q = random_squarefree(rng, deg(rng), 30);
      if (is_squarefree(p * q)) p = p * q;
    }
    CAPTURE(p.to_string());
    const IrreducibilityCertificate full = full_factorization_certificate(p);
    if (auto fast = degree_pattern_sieve(p)) {
      CHECK(fast->verdict == Verdict::irreducible);
      CHECK(full.verdict == Verdict::irreducible);
    }
    // Full factorization is consistent with itself.
    const auto factors = factor_squarefree(p);
    CHECK((factors.size() == 1) == (full.verdict == Verdict::irreducible));
    IntegerPoly back{1};
    for (const auto& f : factors) back = back * f;
    CHECK(proportional(back, p));
  }
}

TEST_CASE("integer polynomial ring laws") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    IntegerPoly a = random_poly(rng, deg(rng), 1000);
    IntegerPoly b = random_poly(rng, deg(rng), 1000);
    IntegerPoly c = random_poly(rng, deg(rng), 1000);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(exact_divide(a * b, b) == a);
    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    if (b.degree() >= 1) {
      // Pseudo-division: lc(b)^(da-db+1) a = q b + r with deg r < deg b.
      IntegerPoly r = pseudo_remainder(a, b);
      CHECK(r.degree() < b.degree());
    }
  }
}

}  // TEST_SUITE
