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

#ifndef AHM_BIVARIATE_HPP
#define AHM_BIVARIATE_HPP

// Sparse bivariate polynomials over Q in X (standing for j) and Y (standing
// for chi*), with exact division and gcd.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace ahm {

struct Monomial {
  int x_deg = 0;
  int y_deg = 0;

  int total() const noexcept { return x_deg + y_deg; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Graded order: higher total degree first, ties broken by higher Y degree.
struct GradedDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.y_deg > b.y_deg;
  }
};

class BivariatePoly {
 public:
  using Terms = std::map<Monomial, mpq_class, GradedDescending>;

  BivariatePoly() = default;
  static BivariatePoly constant(const mpq_class& c);
  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly monomial(const mpq_class& c, Monomial m);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // -1 for the zero polynomial.
  int total_degree() const noexcept;
  int degree_x() const noexcept;
  int degree_y() const noexcept;
  mpq_class coeff(Monomial m) const;
  const Terms& terms() const noexcept { return terms_; }
  // Leading term in the graded order. Requires a nonzero polynomial.
  const Terms::value_type& leading() const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const mpq_class& s);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const mpq_class& s) { return a *= s; }
  BivariatePoly operator-() const;
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  BivariatePoly pow(unsigned n) const;

  // Printed in the variables j and chi, e.g. "3*j*chi + 1/2".
  std::string to_string() const;

 private:
  void add_term(Monomial m, const mpq_class& c);
  Terms terms_;
};

// Quotient a / b; throws NotDivisible unless b divides a exactly.
BivariatePoly divide_exact(const BivariatePoly& a, const BivariatePoly& b);

// Greatest common divisor, scaled so that its leading coefficient is 1.
// gcd(0, 0) = 0.
BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b);

}  // namespace ahm

#endif  // AHM_BIVARIATE_HPP
