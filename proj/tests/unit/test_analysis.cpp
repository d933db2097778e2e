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

#include "ahm/analysis.hpp"
#include "ahm/report_io.hpp"

using namespace ahm;

namespace {

std::vector<mpq_class> ints(std::initializer_list<const char*> ascending) {
  std::vector<mpq_class> r;
  for (const char* s : ascending) r.emplace_back(mpz_class(s));
  return r;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("reports for the reference discriminants") {
  PrecisionContext ctx;
  ClassPolyReport a = class_poly_report(RationalFunction2::chi(), Discriminant(-4), ctx);
  CHECK(a.class_number == 1);
  CHECK(a.h.coeffs == std::vector<mpq_class>{0, 1});
  CHECK(a.p == std::vector<mpq_class>{0, 1});
  CHECK(a.k == 1);
  CHECK(a.irreducible);
  CHECK_FALSE(a.anomaly.has_value());
  CHECK(a.fundamental);
  CHECK(a.delta_mod_24 == 20);

  ClassPolyReport b = class_poly_report(RationalFunction2::j(), Discriminant(-23), ctx);
  CHECK(b.class_number == 3);
  CHECK(b.k == 1);
  CHECK(b.p == ints({"12771880859375", "-5151296875", "3491750", "1"}));
  CHECK(b.irreducible);
  CHECK(b.certificate.verdict == Verdict::irreducible);

  ClassPolyReport c = class_poly_report(RationalFunction2::chi(), Discriminant(-23), ctx);
  CHECK(c.class_number == 3);
  CHECK(c.k == 1);
  CHECK(c.irreducible);
  CHECK(c.delta_mod_24 == 1);
}

TEST_CASE("report invariants hold across a range") {
  PrecisionContext ctx;
  for (const RationalFunction2& f : {RationalFunction2::chi(), parse_rational_function("j + chi"),
                                     parse_rational_function("chi^2/(j + 1)")}) {
    for (std::int64_t d : {-3, -15, -20, -39, -56, -84, -96}) {
      CAPTURE(d);
      ClassPolyReport r = class_poly_report(f, Discriminant(d), ctx);
      CHECK(r.h.degree() == r.class_number);
      CHECK(r.h.degree() == r.k * (static_cast<int>(r.p.size()) - 1));
      if (r.irreducible) CHECK(r.certificate.verdict == Verdict::irreducible);
    }
  }
}

TEST_CASE("a square class polynomial is an anomaly when irreducibility is expected") {
  // f vanishes at both Heegner points of -15, so H = x^2.
  PrecisionContext ctx;
  RationalFunction2 f = parse_rational_function("j^2 + 191025*j - 121287375");
  ClassPolyReport plain = class_poly_report(f, Discriminant(-15), ctx);
  CHECK(plain.k == 2);
  CHECK(plain.p == std::vector<mpq_class>{0, 1});
  CHECK_FALSE(plain.irreducible);
  CHECK_FALSE(plain.anomaly.has_value());
  ClassPolyReport flagged = class_poly_report(f, Discriminant(-15), ctx, {true, true});
  CHECK(flagged.anomaly.has_value());
}

TEST_CASE("sweep ranges") {
  CHECK(discriminants_in_range(-3, -5, false).empty());
  CHECK_THROWS_AS(discriminants_in_range(-10, 0, false), std::invalid_argument);
  auto all = discriminants_in_range(-20, -3, false);
  std::vector<std::int64_t> got;
  for (const auto& d : all) got.push_back(d.value());
  CHECK(got == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -12, -15, -16, -19, -20});
  auto fund = discriminants_in_range(-20, -3, true);
  CHECK(fund.size() == 8);

  PrecisionContext ctx;
  SweepSummary empty = sweep(RationalFunction2::chi(), -3, -5, {}, ctx);
  CHECK(empty.reports.empty());
  CHECK(empty.max_k == 0);
  CHECK(empty.ok());
}

TEST_CASE("sweeps of j and chi* up to 100") {
  PrecisionContext ctx;
  SweepSummary chi = sweep(RationalFunction2::chi(), -100, -3, {true}, ctx);
  CHECK(chi.ok());
  CHECK(chi.max_k == 1);
  for (const ClassPolyReport& r : chi.reports) CHECK(r.k == 1);
  SweepSummary j = sweep(RationalFunction2::j(), -100, -3, {false}, ctx);
  CHECK(j.ok());
  CHECK(j.max_k == 1);
  for (const ClassPolyReport& r : j.reports) {
    CHECK(r.k == 1);
    for (const mpq_class& c : r.h.coeffs) CHECK(c.get_den() == 1);
  }
  CHECK(j.reports.size() == discriminants_in_range(-100, -3, false).size());
}

TEST_CASE("sweep output is independent of the worker count") {
  PrecisionContext ctx;
  SweepOptions one;
  one.jobs = 1;
  SweepOptions many;
  many.jobs = 4;
  SweepSummary a = sweep(RationalFunction2::chi(), -160, -3, {true}, ctx, one);
  SweepSummary b = sweep(RationalFunction2::chi(), -160, -3, {true}, ctx, many);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("rational output does not depend on the working precision") {
  SweepOptions opts;
  opts.report.use_heuristic = false;
  SweepSummary lo = sweep(RationalFunction2::chi(), -120, -3, {true}, PrecisionContext{512, 32, 8192}, opts);
  SweepSummary hi = sweep(RationalFunction2::chi(), -120, -3, {true}, PrecisionContext{1024, 32, 8192}, opts);
  REQUIRE(lo.reports.size() == hi.reports.size());
  for (std::size_t i = 0; i < lo.reports.size(); ++i) {
    CHECK(lo.reports[i].h.coeffs == hi.reports[i].h.coeffs);
    CHECK(lo.reports[i].p == hi.reports[i].p);
    CHECK(lo.reports[i].k == hi.reports[i].k);
  }
}

TEST_CASE("per-discriminant failures do not abort a sweep") {
  // 1/(j - 1728) has a pole at i; the other discriminants still run.
  PrecisionContext ctx;
  SweepSummary s = sweep(parse_rational_function("1/(j - 1728)"), -12, -3, {}, ctx);
  REQUIRE(s.failures.size() == 1);
  CHECK(s.failures[0].delta == -4);
  CHECK(s.failures[0].error.find("PoleAtHeegnerPoint") != std::string::npos);
  CHECK(s.reports.size() == 5);
  CHECK_FALSE(s.ok());
}

TEST_CASE("family sweeps") {
  PrecisionContext ctx;
  FamilySweep fam = family_sweep({RationalFunction2::j(), RationalFunction2::chi(), parse_rational_function("j + chi")},
                                 1, -60, -3, {}, ctx);
  CHECK(fam.sweeps.size() == 3);
  CHECK(fam.max_k >= 1);
  CHECK(fam.degree_bound == 1);
  FamilySweep single = family_sweep({RationalFunction2::chi()}, 1, -60, -3, {true}, ctx);
  CHECK(to_json(single.sweeps[0]) == to_json(sweep(RationalFunction2::chi(), -60, -3, {true}, ctx)));
  CHECK_THROWS_AS(family_sweep({RationalFunction2::j(), parse_rational_function("7")}, 1, -20, -3, {}, ctx),
                  NonconstantRequired);
  CHECK_THROWS_AS(family_sweep({parse_rational_function("j^2")}, 1, -20, -3, {}, ctx), DegreeBoundExceeded);
}

TEST_CASE("Galois interpolation") {
  PrecisionContext ctx;
  GaloisCheckReport a = galois_interpolation_check(Discriminant(-4), ctx);
  CHECK(a.pass);
  CHECK(a.interpolant == std::vector<mpq_class>{0});

  GaloisCheckReport b = galois_interpolation_check(Discriminant(-23), ctx);
  CHECK(b.pass);
  CHECK(b.interpolant == std::vector<mpq_class>{mpq_class(-35679600, 149891), mpq_class(567859, 2548147),
                                                mpq_class(mpz_class(-864), mpz_class("7962959375"))});
  GaloisCheckReport c = galois_interpolation_check(Discriminant(-31), ctx);
  CHECK(c.pass);
  CHECK(c.interpolant == std::vector<mpq_class>{mpq_class(-152702704, 455793),
                                                mpq_class(mpz_class("1523077901"), mpz_class("4811806701")),
                                                mpq_class(mpz_class(-1120), mpz_class("129918780927"))});

  // Swapping two values breaks equivariance; the coefficients stop being rational.
  GaloisCheckReport adv = galois_interpolation_check(Discriminant(-23), PrecisionContext{256, 32, 2048}, {true, true});
  CHECK_FALSE(adv.pass);
  CHECK(adv.adversarial);
  CHECK_FALSE(adv.detail.empty());
  CHECK_THROWS_AS(galois_interpolation_check(Discriminant(-15), ctx, {true, true}), std::invalid_argument);
}

}  // TEST_SUITE
