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

#include <algorithm>
#include <random>

#include "ahm/qform.hpp"
#include "support/brute_force.hpp"

using namespace ahm;

TEST_SUITE("qform") {

TEST_CASE("discriminant validity") {
  CHECK_THROWS_AS(Discriminant(5), InvalidDiscriminant);
  CHECK_THROWS_AS(Discriminant(0), InvalidDiscriminant);
  CHECK_THROWS_AS(Discriminant(-5), InvalidDiscriminant);
  CHECK_THROWS_AS(Discriminant(-2), InvalidDiscriminant);
  try {
    Discriminant d(-6);
  } catch (const InvalidDiscriminant& e) {
    CHECK(e.delta() == -6);
  }
  CHECK(Discriminant(-3).abs() == 3);
  CHECK(Discriminant::is_valid(-4));
  CHECK_FALSE(Discriminant::is_valid(-1));
}

TEST_CASE("fundamental discriminants") {
  for (std::int64_t d : {-3, -4, -7, -8, -15, -20, -23, -24, -84, -399}) CHECK(Discriminant(d).is_fundamental());
  for (std::int64_t d : {-12, -16, -27, -28, -36, -63, -96, -400}) CHECK_FALSE(Discriminant(d).is_fundamental());
}

TEST_CASE("reduced forms match the reference enumeration") {
  using V = std::vector<QuadForm>;
  CHECK(enumerate_reduced(Discriminant(-4)) == V{{1, 0, 1}});
  CHECK(enumerate_reduced(Discriminant(-3)) == V{{1, 1, 1}});
  CHECK(enumerate_reduced(Discriminant(-23)) == V{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
  CHECK(enumerate_reduced(Discriminant(-47)) == V{{1, 1, 12}, {2, -1, 6}, {2, 1, 6}, {3, -1, 4}, {3, 1, 4}});
  CHECK(enumerate_reduced(Discriminant(-84)) == V{{1, 0, 21}, {2, 2, 11}, {3, 0, 7}, {5, 4, 5}});
  CHECK(enumerate_reduced(Discriminant(-96)) == V{{1, 0, 24}, {3, 0, 8}, {4, 4, 7}, {5, 2, 5}});
  CHECK(enumerate_reduced(Discriminant(-23), 2) == V{{2, -1, 3}, {2, 1, 3}});
}

TEST_CASE("class numbers") {
  const std::vector<std::pair<std::int64_t, int>> known{{-3, 1},  {-4, 1},  {-7, 1},   {-8, 1},  {-11, 1},
                                                        {-15, 2}, {-20, 2}, {-23, 3},  {-47, 5}, {-84, 4},
                                                        {-96, 4}, {-399, 16}, {-1999, 27}};
  for (auto [d, h] : known) CHECK(class_number(Discriminant(d)) == h);
  for (std::int64_t d = -3; d >= -600; --d) {
    if (!Discriminant::is_valid(d)) continue;
    CHECK(class_number(Discriminant(d)) == testing::box_class_number(d));
    if (d < -4 && Discriminant(d).is_fundamental())
      CHECK(class_number(Discriminant(d)) == testing::dirichlet_class_number(d));
  }
}

TEST_CASE("reduction is canonical on SL2(Z) orbits") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> step(0, 3);
  for (std::int64_t d : {-23, -47, -84, -199, -420}) {
    for (const QuadForm& f : enumerate_reduced(Discriminant(d))) {
      CHECK(is_reduced(f));
      for (int trial = 0; trial < 25; ++trial) {
        // Apply a random word in S and T^{+-1}.
        QuadForm g = f;
        for (int k = 0; k < 8; ++k) {
          switch (step(rng)) {
            case 0:  // S
              g = {g.c, -g.b, g.a};
              break;
            case 1:  // T
              g = {g.a, g.b + 2 * g.a, g.a + g.b + g.c};
              break;
            default:  // T^{-1}
              g = {g.a, g.b - 2 * g.a, g.a - g.b + g.c};
              break;
          }
        }
        CHECK(discriminant(g) == d);
        CHECK(reduce(g) == f);
      }
    }
  }
}

TEST_CASE("Heegner points") {
  PrecisionContext ctx;
  const BigFloat eps = BigFloat::pow2(-250, 300);
  BigComplex i = heegner_point({1, 0, 1}, ctx);
  CHECK(abs(i.re()) < eps);
  CHECK(abs(i.im() - BigFloat(1L, 300)) < eps);
  BigComplex rho = heegner_point({1, 1, 1}, ctx);
  CHECK(rho.re() == BigFloat::parse("-0.5", 64));
  CHECK(abs(rho.im() * 2L - sqrt(BigFloat(3L, ctx.working_bits()))) < eps);
  CHECK(i.precision() == ctx.working_bits());
}

}  // TEST_SUITE

TEST_SUITE("qform") {

TEST_CASE("reference examples for the form operations") {
  CHECK(discriminant({1, 0, 1}) == -4);
  CHECK(discriminant({1, 1, 6}) == -23);
  CHECK(discriminant({2, -1, 3}) == -23);
  CHECK(is_reduced({1, 0, 1}));
  CHECK_FALSE(is_reduced({3, 1, 2}));
  CHECK_FALSE(is_reduced({2, -2, 3}));
  CHECK(reduce({1, 0, 1}) == QuadForm{1, 0, 1});
  CHECK(reduce({1, 2, 2}) == QuadForm{1, 0, 1});
  const QuadForm r = reduce({6, 5, 2});
  CHECK(discriminant(r) == -23);
  CHECK(is_reduced(r));
  // Brute force: (6,5,2) = (2,-5,6) under S, then T gives (2,-1,3).
  CHECK(r == QuadForm{2, -1, 3});
  CHECK(reduce(r) == r);
  CHECK_FALSE(is_primitive({2, 2, 2}));
  CHECK(enumerate_reduced(Discriminant(-12)) == std::vector<QuadForm>{{1, 0, 3}});
}

TEST_CASE("Heegner point of (2,1,3) is a root of the form") {
  PrecisionContext ctx;
  const mpfr_prec_t w = ctx.working_bits();
  BigComplex tau = heegner_point({2, 1, 3}, ctx);
  BigComplex q = tau * tau * 2L + tau + BigComplex::from_real(BigFloat(3L, w));
  CHECK(abs(q) < BigFloat::pow2(-250, 64));
  CHECK(tau.im() > 0L);
  CHECK_THROWS_AS(heegner_point({-1, 0, -1}, ctx), std::invalid_argument);
}

TEST_CASE("reduced forms lie in the closed fundamental domain") {
  PrecisionContext ctx{128, 32, 8192};
  const BigFloat half = BigFloat::parse("0.5", 64);
  for (std::int64_t d = -3; d >= -2000; --d) {
    if (!Discriminant::is_valid(d)) continue;
    const auto forms = enumerate_reduced(Discriminant(d));
    CHECK(static_cast<int>(forms.size()) == testing::box_class_number(d));
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    for (const QuadForm& f : forms) {
      BigComplex tau = heegner_point(f, ctx);
      CHECK(abs(tau.re()) <= half);
      CHECK(norm(tau) >= BigFloat(1L, 160) - BigFloat::pow2(-100, 160));
      CHECK(is_primitive(f));
      CHECK(reduce(f) == f);
    }
  }
}

}  // TEST_SUITE
