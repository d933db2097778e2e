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
#include <map>

#include "ahm/classpoly.hpp"

using namespace ahm;

namespace {

std::vector<mpq_class> q(std::initializer_list<const char*> ascending) {
  std::vector<mpq_class> r;
  for (const char* s : ascending) {
    mpq_class v(s);
    v.canonicalize();
    r.push_back(v);
  }
  return r;
}

// Independently computed class polynomials (tests/oracles/modular_oracle.py).
const std::map<std::int64_t, std::vector<mpq_class>>& hilbert_oracle() {
  static const std::map<std::int64_t, std::vector<mpq_class>> m{
      {-15, q({"-121287375", "191025", "1"})},
      {-23, q({"12771880859375", "-5151296875", "3491750", "1"})},
      {-31, q({"1566028350940383", "-58682638134", "39491307", "1"})},
      {-47, q({"16042929600623870849609375", "-14982472850828613281250", "5115161850595703125",
               "-9987963828125", "2257834125", "1"})},
      {-84, q({"-5133201653210986057826304", "88821246589810089394176", "-5663679223085309952",
               "-3196800946944", "1"})},
  };
  return m;
}

const std::map<std::int64_t, std::vector<mpq_class>>& chi_oracle() {
  static const std::map<std::int64_t, std::vector<mpq_class>> m{
      {-4, q({"0", "1"})},
      {-3, q({"0", "1"})},
      {-7, q({"1215", "1"})},
      {-15, q({"4322241", "97713", "1"})},
      {-23, q({"7723225827625/23", "7096271875/23", "2102870", "1"})},
      {-31, q({"3158740880125281/31", "159974960310/31", "25946811", "1"})},
      {-47, q({"64133469835509725628209375/2209", "-117781898840670266441250/2209",
               "33903552138258072875/47", "14307554192525/47", "1628847165", "1"})},
      {-84, q({"278957088048704277970944", "14214052194875137327104", "-2625743147965415424",
               "-2530643185152", "1"})},
  };
  return m;
}

}  // namespace

TEST_SUITE("classpoly") {

TEST_CASE("rational reconstruction") {
  CHECK(rational_reconstruct(BigFloat::parse("0.5", 64), 10) == mpq_class(1, 2));
  BigFloat near = BigFloat(1728L, 300) + BigFloat::parse("1e-50", 300);
  CHECK(rational_reconstruct(near, 1000000) == 1728);
  CHECK(rational_reconstruct(BigFloat::pi(200), 10) == mpq_class(22, 7));
  CHECK(rational_reconstruct(BigFloat::pi(200), 1000) == mpq_class(355, 113));
  CHECK_THROWS_AS(rational_reconstruct(sqrt(BigFloat(2L, 200)), 10), ReconstructionFailed);
  CHECK(rational_reconstruct(BigFloat::parse("-2.75", 64), 4) == mpq_class(-11, 4));
  CHECK_THROWS_AS(rational_reconstruct(BigFloat(1L, 64), 0), std::invalid_argument);
}

TEST_CASE("coefficient gate needs a certified error well below the noise floor") {
  PrecisionContext ctx;  // 256 bits: gate at 2^-160
  BigComplex c = BigComplex::from_real(BigFloat(-1728L, 300) + BigFloat::pow2(-200, 300));
  BigFloat resid;
  auto r = reconstruct_coefficient(c, BigFloat::pow2(-199, 64), ctx, &resid);
  REQUIRE(r.has_value());
  CHECK(*r == -1728);
  CHECK(resid.log2_abs() == doctest::Approx(-200).epsilon(0.001));
  // Error bound too large to certify anything.
  CHECK_FALSE(reconstruct_coefficient(c, BigFloat::pow2(-100, 64), ctx).has_value());
  // A visible imaginary part is never rounded away.
  BigComplex tilted(BigFloat(3L, 300), BigFloat::pow2(-10, 300));
  CHECK_FALSE(reconstruct_coefficient(tilted, BigFloat::pow2(-200, 64), ctx).has_value());
  // A generic real number has a close rational with a small denominator, but
  // not one inside the certified error.
  BigComplex irr = BigComplex::from_real(sqrt(BigFloat(2L, 300)));
  CHECK_FALSE(reconstruct_coefficient(irr, BigFloat::pow2(-250, 64), ctx).has_value());
}

TEST_CASE("rationalize examples") {
  PrecisionContext ctx;
  ComplexPoly noisy;
  noisy.coeffs = {BigComplex::from_real(BigFloat(-1728L, 300) + BigFloat::pow2(-200, 300)),
                  BigComplex::from_real(BigFloat(1L, 300))};
  noisy.errors = {BigFloat::pow2(-199, 64), bound::zero()};
  RationalPoly r = rationalize_poly(noisy, ctx);
  CHECK(r.coeffs == std::vector<mpq_class>{-1728, 1});
  CHECK(r.residual.log2_abs() == doctest::Approx(-200).epsilon(0.001));

  ComplexPoly bad = noisy;
  bad.coeffs[0] = BigComplex(BigFloat(-1728L, 300), BigFloat::pow2(-10, 300));
  CHECK_THROWS_AS(rationalize_poly(bad, ctx), PrecisionExhausted);
}

TEST_CASE("class polynomials of j have integer coefficients") {
  PrecisionContext ctx;
  BigComplex x1728 = BigComplex::from_real(BigFloat(1728L, 64));
  ComplexPoly h4 = build_class_poly(RationalFunction2::j(), Discriminant(-4), ctx);
  REQUIRE(h4.degree() == 1);
  CHECK(abs(h4.coeffs[0] + x1728) <= bound::add(h4.errors[0], BigFloat::pow2(-128, 64)));
  CHECK(h4.coeffs[1] == BigComplex::from_real(BigFloat(1L, 64)));

  for (const auto& [d, expected] : hilbert_oracle()) {
    CAPTURE(d);
    ExactClassPoly e = exact_class_poly(RationalFunction2::j(), Discriminant(d), ctx);
    CHECK(e.h.coeffs == expected);
    for (const mpq_class& c : e.h.coeffs) CHECK(c.get_den() == 1);
  }
  // -23 at exactly 512 bits.
  ExactClassPoly e = exact_class_poly(RationalFunction2::j(), Discriminant(-23), PrecisionContext{512, 32, 8192}, false);
  CHECK(e.prec_used == 512);
  CHECK(e.h.residual < BigFloat::pow2(-256, 64));
}

TEST_CASE("class polynomials of chi*") {
  PrecisionContext ctx;
  for (const auto& [d, expected] : chi_oracle()) {
    CAPTURE(d);
    ExactClassPoly e = exact_class_poly(RationalFunction2::chi(), Discriminant(d), ctx);
    CHECK(e.h.coeffs == expected);
    CHECK(e.h.degree() == class_number(Discriminant(d)));
  }
}

TEST_CASE("re-evaluation at doubled precision") {
  PrecisionContext ctx;
  for (std::int64_t d : {-23, -47, -84, -151}) {
    CAPTURE(d);
    ExactClassPoly e = exact_class_poly(RationalFunction2::chi(), Discriminant(d), ctx);
    PrecisionContext twice = PrecisionContext{e.prec_used, 32, 8192}.doubled();
    for (const HeegnerValue& v : heegner_values(RationalFunction2::chi(), Discriminant(d), twice)) {
      BigComplex y = evaluate(e.h, v.value.value);
      CHECK(abs(y) < BigFloat::pow2(-e.prec_used / 2, 64));
    }
  }
}

TEST_CASE("root order does not change the polynomial") {
  PrecisionContext ctx{1024, 32, 8192};
  std::vector<HeegnerValue> vals = heegner_values(RationalFunction2::chi(), Discriminant(-47), ctx);
  std::vector<ModularValue> roots;
  for (const HeegnerValue& v : vals) roots.push_back(v.value);
  RationalPoly a = rationalize_poly(expand_roots(roots), ctx);
  std::reverse(roots.begin(), roots.end());
  std::rotate(roots.begin(), roots.begin() + 2, roots.end());
  RationalPoly b = rationalize_poly(expand_roots(roots), ctx);
  CHECK(a.coeffs == b.coeffs);
  CHECK(a.coeffs == chi_oracle().at(-47));
}

TEST_CASE("errors") {
  PrecisionContext ctx;
  try {
    build_class_poly(parse_rational_function("1/(j - 1728)"), Discriminant(-4), ctx);
    FAIL("expected a pole");
  } catch (const PoleAtHeegnerPoint& e) {
    CHECK(e.a() == 1);
    CHECK(e.b() == 0);
    CHECK(e.c() == 1);
  }
  CHECK_THROWS_AS(build_class_poly(parse_rational_function("1/chi"), Discriminant(-3), ctx), PoleAtHeegnerPoint);
  CHECK_THROWS_AS(build_class_poly(parse_rational_function("5/2"), Discriminant(-3), ctx), NonconstantRequired);
  CHECK_THROWS_AS(Discriminant(-5), InvalidDiscriminant);
  // Exhaustion when the cap is too low for the coefficient size.
  CHECK_THROWS_AS(exact_class_poly(RationalFunction2::j(), Discriminant(-399), PrecisionContext{64, 32, 96}),
                  PrecisionExhausted);
}

TEST_CASE("precision heuristic") {
  CHECK(suggested_precision(RationalFunction2::j(), Discriminant(-3)) == 256);
  const int a = suggested_precision(RationalFunction2::j(), Discriminant(-399));
  const int b = suggested_precision(RationalFunction2::j(), Discriminant(-1999));
  CHECK(a <= b);
  CHECK((a & (a - 1)) == 0);
}

}  // TEST_SUITE
