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

#include <algorithm>
#include <stdexcept>

#include "ahm/ahm_eval.hpp"
#include "ahm/errors.hpp"

namespace ahm {

RationalFunction2::RationalFunction2(BivariatePoly numerator, BivariatePoly denominator,
                                     std::optional<int> degree_bound) {
  if (denominator.is_zero()) {
    throw std::invalid_argument("rational function with zero denominator");
  }
  if (numerator.is_zero()) {
    num_ = BivariatePoly();
    den_ = BivariatePoly::constant(1);
  } else {
    BivariatePoly g = gcd(numerator, denominator);
    num_ = divide_exact(numerator, g);
    den_ = divide_exact(denominator, g);
    mpq_class lc = den_.leading().second;
    if (lc != 1) {
      mpq_class inv = 1 / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }
  const int d = degree();
  if (degree_bound) {
    if (d > *degree_bound) {
      throw DegreeBoundExceeded("rational function of degree " + std::to_string(d) +
                                " exceeds the degree bound " + std::to_string(*degree_bound));
    }
    degree_bound_ = *degree_bound;
  } else {
    degree_bound_ = d;
  }
}

int RationalFunction2::degree() const noexcept {
  return std::max({num_.total_degree(), den_.total_degree(), 0});
}

RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b) {
  if (b.num_.is_zero()) throw DivisionByZero("DivisionByZero: rational function divided by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction2 RationalFunction2::operator-() const { return {-num_, den_}; }

RationalFunction2 RationalFunction2::pow(int n) const {
  if (n >= 0) return {num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n))};
  if (num_.is_zero()) throw DivisionByZero("DivisionByZero: negative power of zero");
  return {den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n))};
}

std::string RationalFunction2::to_string() const {
  if (den_ == BivariatePoly::constant(1)) return num_.to_string();
  auto wrap = [](const BivariatePoly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

bool is_constant(const RationalFunction2& f) {
  const BivariatePoly& n = f.numerator();
  const BivariatePoly& d = f.denominator();
  if (n.is_zero()) return true;
  if (n.terms().size() != d.terms().size()) return false;
  const mpq_class ratio = n.leading().second / d.leading().second;
  return n == d * ratio;
}

}  // namespace ahm
