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

#include "ahm/numerics.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace ahm {

void PrecisionContext::validate() const {
  if (prec_bits < 64) {
    throw std::invalid_argument("precision context: prec_bits must be at least 64");
  }
  if (guard_bits < 0) {
    throw std::invalid_argument("precision context: guard_bits must be nonnegative");
  }
  if (prec_bits + guard_bits > max_prec_bits) {
    throw std::invalid_argument("precision context: prec_bits + guard_bits exceeds max_prec_bits (" +
                                std::to_string(prec_bits) + " + " + std::to_string(guard_bits) +
                                " > " + std::to_string(max_prec_bits) + ")");
  }
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
  BigFloat r(prec);
  std::string s(text);
  char* end = nullptr;
  if (mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double BigFloat::log2_abs() const noexcept {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

mpq_class BigFloat::to_mpq() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("to_mpq: value is not finite");
  if (mpfr_zero_p(v_)) return mpq_class(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= scale;
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= scale;
  }
  q.canonicalize();
  return q;
}

mpz_class BigFloat::round_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDNA);
  return z;
}

namespace {
std::string format_mpfr(const char* fmt, int digits, mpfr_srcptr v) {
  char* buf = nullptr;
  int n = mpfr_asprintf(&buf, fmt, digits, v);
  if (n < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf, static_cast<std::size_t>(n));
  mpfr_free_str(buf);
  return s;
}
}  // namespace

std::string BigFloat::to_string(int digits) const {
  return format_mpfr("%.*Re", std::max(digits - 1, 0), v_);
}

std::string BigFloat::to_fixed(int decimals) const {
  return format_mpfr("%.*Rf", std::max(decimals, 0), v_);
}

namespace {
mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define AHM_UNARY(name, fn)                      \
  BigFloat name(const BigFloat& x) {             \
    BigFloat r(x.precision());                   \
    fn(r.get(), x.get(), MPFR_RNDN);             \
    return r;                                    \
  }
AHM_UNARY(abs, mpfr_abs)
AHM_UNARY(sqrt, mpfr_sqrt)
AHM_UNARY(exp, mpfr_exp)
AHM_UNARY(log, mpfr_log)
AHM_UNARY(sin, mpfr_sin)
AHM_UNARY(cos, mpfr_cos)
#undef AHM_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat round(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

// ---------------------------------------------------------------------------
// bound

namespace bound {

BigFloat zero() { return BigFloat(kBoundBits); }

BigFloat of(const BigFloat& x) {
  BigFloat r(kBoundBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

BigFloat add(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundBits);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat scale(const BigFloat& a, double factor) {
  BigFloat r(kBoundBits);
  mpfr_mul_d(r.get(), a.get(), factor, MPFR_RNDU);
  return r;
}

BigFloat unit(long bits) { return BigFloat::pow2(-bits, kBoundBits); }

}  // namespace bound

// ---------------------------------------------------------------------------
// BigComplex

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const mpfr_prec_t p = std::max(precision(), rhs.precision());
  BigFloat n = norm(rhs);
  // |rhs|^2 < 2^{-4p}  <=>  |rhs| < 2^{-2p}
  if (n < BigFloat::pow2(-4 * static_cast<long>(p), p)) {
    throw DivisionByZero("DivisionByZero: complex divisor below 2^-" + std::to_string(2 * p));
  }
  BigFloat re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
  BigFloat im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  std::string t = im_.to_string(digits);
  if (!t.empty() && t[0] == '-') return s + " - " + t.substr(1) + "i";
  return s + " + " + t + "i";
}

BigFloat norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigComplex exp(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  BigFloat m = exp(z.re().rounded(p));
  BigFloat s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex sqrt(const BigComplex& z) {
  const mpfr_prec_t p = z.precision();
  if (z.is_zero()) return BigComplex(p);
  BigFloat r = abs(z);
  const bool im_negative = z.im().sign() < 0;
  if (z.re().sign() >= 0) {
    BigFloat t = sqrt((r + z.re()) / 2L);
    return {t, z.im() / (t * 2L)};
  }
  BigFloat t = sqrt((r - z.re()) / 2L);
  BigFloat re = abs(z.im()) / (t * 2L);
  return {re, im_negative ? -t : t};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return {log(abs(z)), atan2(z.im(), z.re())};
}

BigComplex pow(const BigComplex& z, long n) {
  const mpfr_prec_t p = z.precision();
  if (n < 0) {
    BigComplex one = BigComplex::from_real(BigFloat(1L, p));
    return one / pow(z, -n);
  }
  BigComplex result = BigComplex::from_real(BigFloat(1L, p));
  BigComplex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return BigComplex(z.precision());
    throw DomainError("pow: zero base with exponent of nonpositive real part");
  }
  return exp(w * log(z));
}

BigFloat zero_threshold(const PrecisionContext& ctx) {
  return BigFloat::pow2(-ctx.prec_bits / 2, bound::kBoundBits);
}

bool is_numerically_zero(const BigFloat& x, const PrecisionContext& ctx) {
  return abs(x) < zero_threshold(ctx);
}

bool is_numerically_zero(const BigComplex& z, const PrecisionContext& ctx) {
  return abs(z) < zero_threshold(ctx);
}

}  // namespace ahm
