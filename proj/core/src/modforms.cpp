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

#include "ahm/modforms.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace ahm {

mpz_class sigma(int k, std::int64_t n) {
  if (k < 0 || n < 1) throw std::invalid_argument("sigma: need k >= 0 and n >= 1");
  mpz_class total = 0;
  mpz_class term;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    total += term;
    const std::int64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      total += term;
    }
  }
  return total;
}

namespace {

struct SeriesParams {
  int weight;
  int sigma_k;
  long factor;
  QExpansion::GrowthRule growth;
};

const SeriesParams& params_for(int weight) {
  // sigma_{k}(n) <= n^{k+1}
  static const std::array<SeriesParams, 3> params_table{{
      {2, 1, -24, {24, 2}},
      {4, 3, 240, {240, 4}},
      {6, 5, -504, {504, 6}},
  }};
  for (const auto& s : params_table) {
    if (s.weight == weight) return s;
  }
  throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
}

using CoeffSnapshot = std::shared_ptr<const std::vector<mpz_class>>;

// Append-only coefficient cache. Readers receive immutable snapshots, so an
// extension never invalidates a vector another thread is using.
class CoefficientCache {
 public:
  CoeffSnapshot get(int weight, int terms) {
    const SeriesParams& params = params_for(weight);
    Slot& slot = slots_[static_cast<std::size_t>(weight / 2 - 1)];
    std::lock_guard<std::mutex> lock(slot.mutex);
    const std::size_t need = static_cast<std::size_t>(terms) + 1;
    if (slot.coeffs && slot.coeffs->size() >= need) return slot.coeffs;
    auto grown = std::make_shared<std::vector<mpz_class>>();
    std::size_t target = need;
    if (slot.coeffs) {
      *grown = *slot.coeffs;
      target = std::max(need, 2 * slot.coeffs->size());
    } else {
      grown->push_back(mpz_class(1));
    }
    grown->reserve(target);
    for (std::size_t n = grown->size(); n < target; ++n) {
      grown->push_back(params.factor * sigma(params.sigma_k, static_cast<std::int64_t>(n)));
    }
    slot.coeffs = std::move(grown);
    return slot.coeffs;
  }

 private:
  struct Slot {
    std::mutex mutex;
    CoeffSnapshot coeffs;
  };
  std::array<Slot, 3> slots_;
};

CoefficientCache& cache() {
  static CoefficientCache instance;
  return instance;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Number of terms for which the dominating tail 504 n^6 |q|^n is below 2^{-bits}.
int terms_for(double y, int bits) {
  if (!(y > 0)) throw DomainError("q-expansion evaluation requires Im tau > 0");
  int n = 0;
  while (tail_bound_log2(504.0, 6, y, n) >= -static_cast<double>(bits)) ++n;
  return n;
}

}  // namespace

QExpansion eisenstein(int weight, int terms) {
  if (terms < 1) throw std::invalid_argument("eisenstein: terms must be >= 1");
  const SeriesParams& params = params_for(weight);
  CoeffSnapshot snap = cache().get(weight, terms);
  QExpansion q;
  q.weight = weight;
  q.coeffs.assign(snap->begin(), snap->begin() + terms + 1);
  q.tail = params.growth;
  return q;
}

double tail_bound_log2(double scale, int exponent, double y, int n_max) {
  // Terms t_n = scale * n^k * r^n, r = exp(-2 pi y), summed in the log domain.
  const long double log_r = -static_cast<long double>(kTwoPi) * y;
  const long double log_s = std::log(static_cast<long double>(scale));
  const int k = exponent;
  auto log_term = [&](long double n) { return log_s + k * std::log(n) + n * log_r; };

  long double acc_max = -std::numeric_limits<long double>::infinity();
  long double acc_sum = 0;  // sum of exp(lt - acc_max)
  auto accumulate = [&](long double lt) {
    if (lt > acc_max) {
      acc_sum = acc_sum * std::exp(acc_max - lt) + 1;
      acc_max = lt;
    } else {
      acc_sum += std::exp(lt - acc_max);
    }
  };

  long double n = static_cast<long double>(n_max) + 1;
  for (int explicit_terms = 0;; ++explicit_terms, n += 1) {
    const long double ratio_log = k * std::log1p(1 / n) + log_r;  // t_{n+1}/t_n
    accumulate(log_term(n));
    if (explicit_terms >= 64 && ratio_log < std::log(0.5L)) {
      // Ratios only shrink from here on: geometric majorant for the rest.
      const long double rho = std::exp(ratio_log);
      accumulate(log_term(n) + ratio_log - std::log1p(-rho));
      break;
    }
  }
  const long double ln_total = acc_max + std::log(acc_sum);
  return static_cast<double>(ln_total / std::log(2.0L)) + 1e-9;
}

int truncation_length(double min_im_tau, const PrecisionContext& ctx) {
  const double lower = std::sqrt(3.0) / 2;
  if (!(min_im_tau >= lower * (1 - 1e-12))) {
    throw DomainError("truncation_length: Im tau below sqrt(3)/2");
  }
  return terms_for(min_im_tau, ctx.working_bits());
}

int truncation_length(const BigFloat& min_im_tau, const PrecisionContext& ctx) {
  return truncation_length(min_im_tau.to_double(), ctx);
}

// ---------------------------------------------------------------------------
// ModularValue arithmetic. u = 2^{1-w} is the unit roundoff at the result
// precision; complex products and quotients are charged a few units.

namespace {
BigFloat roundoff(const BigComplex& v, double units) {
  return bound::scale(bound::mul(bound::of(abs(v)), bound::unit(static_cast<long>(v.precision()) - 1)),
                      units);
}
}  // namespace

ModularValue ModularValue::constant(const mpq_class& c, mpfr_prec_t prec) {
  BigFloat re(c, prec);
  ModularValue v{BigComplex::from_real(re), bound::zero()};
  if (BigFloat(c, prec + 64) != re.rounded(prec + 64)) v.certified_abs_error = roundoff(v.value, 1);
  return v;
}

bool ModularValue::may_be_zero() const { return bound::of(abs(value)) <= certified_abs_error; }

ModularValue operator+(const ModularValue& a, const ModularValue& b) {
  BigComplex v = a.value + b.value;
  BigFloat e = bound::add(bound::add(a.certified_abs_error, b.certified_abs_error), roundoff(v, 1));
  return {std::move(v), std::move(e)};
}

ModularValue operator-(const ModularValue& a, const ModularValue& b) {
  BigComplex v = a.value - b.value;
  BigFloat e = bound::add(bound::add(a.certified_abs_error, b.certified_abs_error), roundoff(v, 1));
  return {std::move(v), std::move(e)};
}

ModularValue operator*(const ModularValue& a, const ModularValue& b) {
  BigComplex v = a.value * b.value;
  const BigFloat& ea = a.certified_abs_error;
  const BigFloat& eb = b.certified_abs_error;
  BigFloat e = bound::add(bound::mul(bound::of(abs(a.value)), eb), bound::mul(bound::of(abs(b.value)), ea));
  e = bound::add(e, bound::mul(ea, eb));
  e = bound::add(e, roundoff(v, 4));
  return {std::move(v), std::move(e)};
}

ModularValue operator/(const ModularValue& a, const ModularValue& b) {
  BigFloat mag_b = abs(b.value);
  BigFloat lower(bound::kBoundBits);
  mpfr_sub(lower.get(), mag_b.get(), b.certified_abs_error.get(), MPFR_RNDD);
  if (!(lower > bound::scale(b.certified_abs_error, 1.0)) || lower.sign() <= 0) {
    throw PrecisionFault("division by a value indistinguishable from zero");
  }
  BigComplex v = a.value / b.value;
  // |a/b - a'/b'| <= (e_a + |a/b| e_b) / (|b| - e_b)
  BigFloat e = bound::add(a.certified_abs_error, bound::mul(bound::of(abs(v)), b.certified_abs_error));
  e = bound::div(e, lower);
  e = bound::add(e, roundoff(v, 6));
  return {std::move(v), std::move(e)};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct QPoint {
  BigComplex q;
  BigFloat abs_q;        // bound on |q|
  double rel_err_units;  // relative error of q in units of 2^{1-w}
  double y;
};

QPoint nome(const BigComplex& tau, mpfr_prec_t w) {
  BigFloat two_pi = BigFloat::pi(w) * 2L;
  BigFloat x = tau.re().rounded(w);
  BigFloat y = tau.im().rounded(w);
  if (!(y.sign() > 0)) throw DomainError("q-expansion evaluation requires Im tau > 0");
  BigFloat mag = exp(-(two_pi * y));
  BigFloat s(w), c(w);
  BigFloat angle = two_pi * x;
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  QPoint p{{mag * c, mag * s}, bound::scale(bound::of(mag), 1.0 + 1e-15), 0, y.to_double()};
  const double ax = std::fabs(x.to_double());
  p.rel_err_units = 8 + 4 * kTwoPi * (ax + p.y);
  return p;
}

ModularValue horner(const std::vector<mpz_class>& c, int n_terms,
                    const std::optional<QExpansion::GrowthRule>& tail, const QPoint& qp,
                    mpfr_prec_t w) {
  const int top = std::min<int>(n_terms, static_cast<int>(c.size()) - 1);
  mpfr_t re, im, t1, t2;
  mpfr_inits2(w, re, im, t1, t2, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(re, c[static_cast<std::size_t>(top)].get_mpz_t(), MPFR_RNDN);
  mpfr_set_zero(im, 1);
  mpfr_srcptr qr = qp.q.re().get();
  mpfr_srcptr qi = qp.q.im().get();
  for (int n = top - 1; n >= 0; --n) {
    // (re + i im) * (qr + i qi) + c_n
    mpfr_mul(t1, re, qr, MPFR_RNDN);
    mpfr_mul(t2, im, qi, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, re, qi, MPFR_RNDN);
    mpfr_mul(im, im, qr, MPFR_RNDN);
    mpfr_add(im, im, t2, MPFR_RNDN);
    mpfr_add_z(re, t1, c[static_cast<std::size_t>(n)].get_mpz_t(), MPFR_RNDN);
  }
  BigComplex value(w);
  mpfr_set(value.re().get(), re, MPFR_RNDN);
  mpfr_set(value.im().get(), im, MPFR_RNDN);
  mpfr_clears(re, im, t1, t2, static_cast<mpfr_ptr>(nullptr));

  // S = sum |c_n| |q|^n and S1 = sum n |c_n| |q|^{n}, rounded up.
  BigFloat s = bound::zero();
  BigFloat s1 = bound::zero();
  for (int n = top; n >= 0; --n) {
    BigFloat cn(bound::kBoundBits);
    mpfr_set_z(cn.get(), c[static_cast<std::size_t>(n)].get_mpz_t(), MPFR_RNDU);
    cn = bound::of(cn);
    s = bound::add(bound::mul(s, qp.abs_q), cn);
    s1 = bound::add(bound::mul(s1, qp.abs_q), bound::scale(cn, n));
  }
  const BigFloat u = bound::unit(static_cast<long>(w) - 1);
  BigFloat err = bound::mul(bound::scale(u, 6.0 * (top + 1) + 2), s);
  err = bound::add(err, bound::mul(bound::scale(u, qp.rel_err_units), s1));
  if (tail) {
    const double lg = tail_bound_log2(static_cast<double>(tail->scale), tail->exponent, qp.y, top);
    BigFloat t = BigFloat::pow2(static_cast<long>(std::ceil(lg)), bound::kBoundBits);
    err = bound::add(err, t);
  }
  return {std::move(value), std::move(err)};
}

}  // namespace

ModularValue eval_qexp(const QExpansion& series, const BigComplex& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t w = ctx.working_bits();
  if (series.coeffs.empty()) return ModularValue::exact(BigComplex(w));
  QPoint qp = nome(tau, w);
  return horner(series.coeffs, static_cast<int>(series.terms()), series.tail, qp, w);
}

EisensteinValues eval_eisenstein(const BigComplex& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t w = ctx.working_bits();
  QPoint qp = nome(tau, w);
  const int n = terms_for(qp.y, static_cast<int>(w));
  const int terms = std::max(n, 1);
  CoeffSnapshot c2 = cache().get(2, terms);
  CoeffSnapshot c4 = cache().get(4, terms);
  CoeffSnapshot c6 = cache().get(6, terms);
  return {horner(*c2, terms, params_for(2).growth, qp, w),
          horner(*c4, terms, params_for(4).growth, qp, w),
          horner(*c6, terms, params_for(6).growth, qp, w)};
}

BigComplex reduce_to_fundamental_domain(const BigComplex& tau) {
  if (!(tau.im().sign() > 0)) throw DomainError("tau must lie in the upper half plane");
  const mpfr_prec_t p = tau.precision();
  BigComplex z = tau.rounded(p);
  const BigFloat one_minus = BigFloat(1L, p) - BigFloat::pow2(-static_cast<long>(p) + 8, p);
  for (int iter = 0; iter < 10000; ++iter) {
    z.re() -= round(z.re());
    BigFloat n2 = norm(z);
    if (!(n2 < one_minus)) break;
    // tau -> -1/tau = -conj(tau)/|tau|^2
    z = BigComplex(-z.re() / n2, z.im() / n2);
  }
  return z;
}

namespace {

ModularValue discriminant_form(const EisensteinValues& e, const PrecisionContext& ctx,
                               ModularValue* e4_cubed) {
  ModularValue e4_3 = e.e4 * e.e4 * e.e4;
  ModularValue den = e4_3 - e.e6 * e.e6;
  if (den.may_be_zero() || is_numerically_zero(den.value, ctx)) {
    throw PrecisionFault("E4^3 - E6^2 is numerically zero");
  }
  if (e4_cubed) *e4_cubed = std::move(e4_3);
  return den;
}

ModularValue e2_correction(const BigComplex& tau, mpfr_prec_t w) {
  // 3 / (pi Im tau)
  BigFloat v = BigFloat(3L, w) / (BigFloat::pi(w) * tau.im().rounded(w));
  BigComplex c = BigComplex::from_real(v);
  BigFloat err = roundoff(c, 4);
  return {std::move(c), std::move(err)};
}

}  // namespace

ModularValue j_from_eisenstein(const EisensteinValues& e, const PrecisionContext& ctx) {
  ModularValue e4_3;
  ModularValue den = discriminant_form(e, ctx, &e4_3);
  const mpfr_prec_t w = e.e4.precision();
  return ModularValue::constant(1728, w) * e4_3 / den;
}

ModularValue chi_star_from_eisenstein(const EisensteinValues& e, const BigComplex& tau,
                                      const PrecisionContext& ctx) {
  ModularValue den = discriminant_form(e, ctx, nullptr);
  const mpfr_prec_t w = e.e4.precision();
  ModularValue e2s = e.e2 - e2_correction(tau, w);
  return ModularValue::constant(1728, w) * e2s * e.e4 * e.e6 / den;
}

ModularValue eval_E2star(const BigComplex& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t w = ctx.working_bits();
  EisensteinValues e = eval_eisenstein(tau, ctx);
  return e.e2 - e2_correction(tau, w);
}

JChiValues eval_j_chi(const BigComplex& tau, const PrecisionContext& ctx) {
  return with_escalation(
      [&](const PrecisionContext& c) -> std::optional<JChiValues> {
        BigComplex z = reduce_to_fundamental_domain(tau.rounded(std::max<mpfr_prec_t>(
            tau.precision(), c.working_bits())));
        EisensteinValues e = eval_eisenstein(z, c);
        return JChiValues{j_from_eisenstein(e, c), chi_star_from_eisenstein(e, z, c)};
      },
      ctx);
}

ModularValue eval_j(const BigComplex& tau, const PrecisionContext& ctx) {
  return with_escalation(
      [&](const PrecisionContext& c) -> std::optional<ModularValue> {
        BigComplex z = reduce_to_fundamental_domain(tau.rounded(std::max<mpfr_prec_t>(
            tau.precision(), c.working_bits())));
        return j_from_eisenstein(eval_eisenstein(z, c), c);
      },
      ctx);
}

ModularValue eval_chi_star(const BigComplex& tau, const PrecisionContext& ctx) {
  return with_escalation(
      [&](const PrecisionContext& c) -> std::optional<ModularValue> {
        BigComplex z = reduce_to_fundamental_domain(tau.rounded(std::max<mpfr_prec_t>(
            tau.precision(), c.working_bits())));
        return chi_star_from_eisenstein(eval_eisenstein(z, c), z, c);
      },
      ctx);
}

}  // namespace ahm
