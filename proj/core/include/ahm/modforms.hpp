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

#ifndef AHM_MODFORMS_HPP
#define AHM_MODFORMS_HPP

// q-expansions of the normalized Eisenstein series E2, E4, E6 and
// arbitrary-precision evaluation of j, the almost holomorphic E2* and
//
//   chi* = 1728 * E2* E4 E6 / (E4^3 - E6^2).
//
// Values come back as ModularValue: a complex center plus an absolute error
// bound that accounts for series truncation, rounding, and the rounding of
// the argument tau itself.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ahm/numerics.hpp"

namespace ahm {

// Truncated power series sum_{n=0}^{N} c_n q^n with exact integer
// coefficients. When `tail` is set, every discarded coefficient satisfies
// |c_n| <= tail->scale * n^tail->exponent; otherwise the series is exact.
struct QExpansion {
  struct GrowthRule {
    long scale;
    int exponent;
  };

  int weight = 0;
  std::vector<mpz_class> coeffs{mpz_class(1)};
  std::optional<GrowthRule> tail;

  std::size_t terms() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// sum_{d | n} d^k
mpz_class sigma(int k, std::int64_t n);

// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
// E6 = 1 - 504 sum sigma_5(n) q^n, through the q^terms coefficient.
// Coefficients are cached per weight and extended on demand.
QExpansion eisenstein(int weight, int terms);

// Smallest N for which the discarded tail sum_{n>N} 504 n^6 |q|^n with
// |q| = exp(-2 pi Im tau) falls below 2^{-(prec_bits + guard_bits)}.
// Throws DomainError if Im tau < sqrt(3)/2.
int truncation_length(const BigFloat& min_im_tau, const PrecisionContext& ctx);
int truncation_length(double min_im_tau, const PrecisionContext& ctx);

// log2 of an upper bound for sum_{n>N} scale * n^exponent * exp(-2 pi y n).
double tail_bound_log2(double scale, int exponent, double y, int n_max);

struct ModularValue {
  BigComplex value;
  BigFloat certified_abs_error = bound::zero();

  static ModularValue exact(BigComplex v) { return {std::move(v), bound::zero()}; }
  // A rational constant rounded to `prec` bits.
  static ModularValue constant(const mpq_class& c, mpfr_prec_t prec);

  mpfr_prec_t precision() const noexcept { return value.precision(); }
  // |value| <= certified_abs_error: zero cannot be excluded.
  bool may_be_zero() const;

  friend ModularValue operator+(const ModularValue& a, const ModularValue& b);
  friend ModularValue operator-(const ModularValue& a, const ModularValue& b);
  friend ModularValue operator*(const ModularValue& a, const ModularValue& b);
  // Throws PrecisionFault when the divisor's error bound reaches its magnitude.
  friend ModularValue operator/(const ModularValue& a, const ModularValue& b);
  ModularValue operator-() const { return {-value, certified_abs_error}; }
};

// Horner evaluation at q = exp(2 pi i tau). The series is used as given; the
// tail rule, if any, contributes to the error bound.
ModularValue eval_qexp(const QExpansion& series, const BigComplex& tau, const PrecisionContext& ctx);

struct EisensteinValues {
  ModularValue e2;
  ModularValue e4;
  ModularValue e6;
};

// E2, E4, E6 at tau without any change of variable. Any Im tau > 0 is
// accepted; the truncation is chosen from Im tau.
EisensteinValues eval_eisenstein(const BigComplex& tau, const PrecisionContext& ctx);

// The SL2(Z)-equivalent point in the closure of the standard fundamental
// domain: |Re| <= 1/2, |tau| >= 1.
BigComplex reduce_to_fundamental_domain(const BigComplex& tau);

// Single-attempt compositions. Throw PrecisionFault when E4^3 - E6^2 is
// numerically zero.
ModularValue j_from_eisenstein(const EisensteinValues& e, const PrecisionContext& ctx);
ModularValue chi_star_from_eisenstein(const EisensteinValues& e, const BigComplex& tau,
                                      const PrecisionContext& ctx);

// E2(tau) - 3 / (pi Im tau)
ModularValue eval_E2star(const BigComplex& tau, const PrecisionContext& ctx);

// j and chi* are SL2(Z)-invariant, so the argument is first moved into the
// fundamental domain. A numerically zero denominator escalates precision;
// the returned value may therefore carry more bits than requested.
ModularValue eval_j(const BigComplex& tau, const PrecisionContext& ctx);
ModularValue eval_chi_star(const BigComplex& tau, const PrecisionContext& ctx);

struct JChiValues {
  ModularValue j;
  ModularValue chi_star;
};
JChiValues eval_j_chi(const BigComplex& tau, const PrecisionContext& ctx);

}  // namespace ahm

#endif  // AHM_MODFORMS_HPP
