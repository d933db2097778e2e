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

#ifndef AHM_NUMERICS_HPP
#define AHM_NUMERICS_HPP

// Arbitrary-precision real and complex arithmetic on top of MPFR, plus the
// precision policy shared by every evaluating module.
//
// Every BigFloat carries its own mantissa precision. Binary operations
// produce a result at the larger of the two operand precisions, rounded to
// nearest. Error bookkeeping quantities live in the `bound` namespace and are
// always rounded upward at low precision.

#include <mpfr.h>

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "ahm/errors.hpp"

namespace ahm {

struct PrecisionContext {
  int prec_bits = 256;
  int guard_bits = 32;
  int max_prec_bits = 8192;

  int working_bits() const noexcept { return prec_bits + guard_bits; }
  bool valid() const noexcept {
    return prec_bits >= 64 && guard_bits >= 0 && max_prec_bits > 0 &&
           prec_bits + guard_bits <= max_prec_bits;
  }
  // Throws std::invalid_argument when the invariants do not hold.
  void validate() const;

  PrecisionContext with_prec(int bits) const {
    PrecisionContext c = *this;
    c.prec_bits = bits;
    return c;
  }
  bool can_double() const noexcept { return 2 * prec_bits + guard_bits <= max_prec_bits; }
  PrecisionContext doubled() const { return with_prec(2 * prec_bits); }
};

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(long value, mpfr_prec_t prec);
  BigFloat(int value, mpfr_prec_t prec) : BigFloat(static_cast<long>(value), prec) {}
  BigFloat(double value, mpfr_prec_t prec);
  BigFloat(const mpz_class& value, mpfr_prec_t prec);
  BigFloat(const mpq_class& value, mpfr_prec_t prec);
  // Accepts decimal strings such as "-1.25e-3".
  static BigFloat parse(std::string_view text, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  // 2^e at the given precision.
  static BigFloat pow2(long e, mpfr_prec_t prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  // Rounds the value to a new precision.
  BigFloat rounded(mpfr_prec_t prec) const;

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2|x| as a double, valid far outside the double exponent range.
  // Returns -infinity for zero.
  double log2_abs() const noexcept;
  // Exact binary value as a rational.
  mpq_class to_mpq() const;
  // Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;
  // Fixed-point notation with the given number of fractional digits.
  std::string to_fixed(int decimals) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b) { BigFloat r(a); r *= b; return r; }
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b) { BigFloat r(a); r /= b; return r; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
// Nearest integer value, kept as a BigFloat.
BigFloat round(const BigFloat& x);

// Upper-bound arithmetic on nonnegative error magnitudes. Results are
// computed at kBoundBits of precision and rounded toward +infinity.
namespace bound {
inline constexpr mpfr_prec_t kBoundBits = 64;
BigFloat zero();
// |x| rounded up.
BigFloat of(const BigFloat& x);
BigFloat add(const BigFloat& a, const BigFloat& b);
BigFloat mul(const BigFloat& a, const BigFloat& b);
BigFloat div(const BigFloat& a, const BigFloat& b);
BigFloat scale(const BigFloat& a, double factor);
// 2^{-bits}.
BigFloat unit(long bits);
}  // namespace bound

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  static BigComplex from_real(const BigFloat& re) { return {re, BigFloat(re.precision())}; }
  // The imaginary unit.
  static BigComplex i(mpfr_prec_t prec) { return {BigFloat(prec), BigFloat(1L, prec)}; }

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  BigFloat& re() noexcept { return re_; }
  BigFloat& im() noexcept { return im_; }
  mpfr_prec_t precision() const noexcept {
    return std::max(re_.precision(), im_.precision());
  }
  BigComplex rounded(mpfr_prec_t prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  // Throws DivisionByZero when |rhs| < 2^{-2p}, p the operand precision.
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex operator-() const { return {-re_, -im_}; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator*(const BigComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string(int digits) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
// |z|^2
BigFloat norm(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch: the cut lies along the negative real axis and the
// result has nonnegative real part.
BigComplex sqrt(const BigComplex& z);
// Principal branch of the logarithm.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);

// Values below this magnitude are treated as numerically zero: 2^{-prec/2}.
BigFloat zero_threshold(const PrecisionContext& ctx);
bool is_numerically_zero(const BigFloat& x, const PrecisionContext& ctx);
bool is_numerically_zero(const BigComplex& z, const PrecisionContext& ctx);

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

// Runs `task` at ctx, then at doubled prec_bits while prec_bits + guard_bits
// stays within max_prec_bits, until the task returns a value. A task signals
// failure by returning std::nullopt or throwing PrecisionFault. Throws
// PrecisionExhausted when the cap is reached.
template <class Task>
  requires std::invocable<Task&, const PrecisionContext&> &&
           is_optional<std::invoke_result_t<Task&, const PrecisionContext&>>::value
auto with_escalation(Task&& task, PrecisionContext ctx)
    -> typename std::invoke_result_t<Task&, const PrecisionContext&>::value_type {
  ctx.validate();
  std::string last_fault;
  while (true) {
    try {
      if (auto result = task(std::as_const(ctx))) return std::move(*result);
    } catch (const PrecisionFault& fault) {
      last_fault = fault.what();
    }
    if (!ctx.can_double()) break;
    ctx = ctx.doubled();
  }
  std::string msg = "PrecisionExhausted: no success up to " + std::to_string(ctx.prec_bits) +
                    " bits (cap " + std::to_string(ctx.max_prec_bits) + ")";
  if (!last_fault.empty()) msg += "; last fault: " + last_fault;
  throw PrecisionExhausted(msg);
}

}  // namespace ahm

#endif  // AHM_NUMERICS_HPP
