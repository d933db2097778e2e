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

#ifndef AHM_AHM_EVAL_HPP
#define AHM_AHM_EVAL_HPP

// Rational functions f = g/h with g, h in Q[j, chi*], their evaluation at
// points of the upper half plane, and the real Jacobian of f viewed as a map
// R^2 -> R^2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahm/bivariate.hpp"
#include "ahm/modforms.hpp"
#include "ahm/numerics.hpp"

namespace ahm {

// Kept in canonical form: numerator and denominator coprime, denominator
// scaled so its leading coefficient (graded order) is 1.
class RationalFunction2 {
 public:
  // Throws std::invalid_argument for a zero denominator and
  // DegreeBoundExceeded when either side exceeds `degree_bound`.
  RationalFunction2(BivariatePoly numerator, BivariatePoly denominator,
                    std::optional<int> degree_bound = std::nullopt);
  RationalFunction2(BivariatePoly polynomial)  // NOLINT(google-explicit-constructor)
      : RationalFunction2(std::move(polynomial), BivariatePoly::constant(1)) {}

  static RationalFunction2 j() { return RationalFunction2(BivariatePoly::x()); }
  static RationalFunction2 chi() { return RationalFunction2(BivariatePoly::y()); }

  const BivariatePoly& numerator() const noexcept { return num_; }
  const BivariatePoly& denominator() const noexcept { return den_; }
  // max of the total degrees of numerator and denominator.
  int degree() const noexcept;
  int degree_bound() const noexcept { return degree_bound_; }
  // Holomorphic: free of chi*.
  bool is_holomorphic() const noexcept { return num_.degree_y() <= 0 && den_.degree_y() <= 0; }

  friend RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b);
  // Throws DivisionByZero when b is identically zero.
  friend RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b);
  RationalFunction2 operator-() const;
  RationalFunction2 pow(int n) const;
  friend bool operator==(const RationalFunction2& a, const RationalFunction2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  BivariatePoly num_;
  BivariatePoly den_;
  int degree_bound_ = 0;
};

// numerator == c * denominator for a rational constant c.
bool is_constant(const RationalFunction2& f);

// Grammar: rationals (integers or decimals), variables `j` and `chi`,
// binary + - * /, unary minus, integer exponents via ^, parentheses.
// Throws ParseError; DegreeBoundExceeded when a bound is given and exceeded.
RationalFunction2 parse_rational_function(std::string_view text,
                                          std::optional<int> degree_bound = std::nullopt);

// f(tau) = numerator(j(tau), chi*(tau)) / denominator(j(tau), chi*(tau)).
// A numerically zero denominator is re-examined at two doubled precisions;
// if it stays zero the point is a pole and PoleAtPoint is thrown.
ModularValue eval_f(const RationalFunction2& f, const BigComplex& tau, const PrecisionContext& ctx);

// Evaluates a bivariate polynomial at already computed (j, chi*) values.
ModularValue eval_poly(const BivariatePoly& p, const JChiValues& at, mpfr_prec_t prec);

struct JacobianSample {
  BigComplex tau;
  BigFloat jacobian_value;
  BigFloat step_used;
  // Central differences: the discretization error is O(step^2).
  int error_order = 2;
};

// det [[d/dx Re f, d/dy Re f], [d/dx Im f, d/dy Im f]] at tau = x + iy by
// central differences with step h = 2^{-prec/3} unless `step_log2` is given
// (h = 2^{step_log2}). Throws NonconstantRequired and PoleAtPoint.
JacobianSample jacobian(const RationalFunction2& f, const BigComplex& tau, const PrecisionContext& ctx,
                        std::optional<long> step_log2 = std::nullopt);

struct JacobianScanEntry {
  BigFloat y;
  std::optional<JacobianSample> sample;  // empty at a pole
  bool pole = false;
  bool nonzero = false;  // |J| > 2^{-prec/2}
};

struct JacobianScan {
  std::vector<JacobianScanEntry> entries;
  bool any_nonzero = false;
  bool all_nonzero = false;
};

// J_f at tau = iy for `samples` equally spaced y in [y_min, y_max]. Poles are
// recorded per entry. Requires sqrt(3)/2 < y_min <= y_max and samples >= 1.
JacobianScan jacobian_scan(const RationalFunction2& f, const BigFloat& y_min, const BigFloat& y_max,
                           int samples, const PrecisionContext& ctx);

}  // namespace ahm

#endif  // AHM_AHM_EVAL_HPP
