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

#include <stdexcept>

#include "ahm/ahm_eval.hpp"
#include "ahm/errors.hpp"

namespace ahm {

ModularValue eval_poly(const BivariatePoly& p, const JChiValues& at, mpfr_prec_t prec) {
  if (p.is_zero()) return ModularValue::exact(BigComplex(prec));
  const int dx = p.degree_x();
  const int dy = p.degree_y();
  std::vector<ModularValue> jp{ModularValue::constant(1, prec)};
  std::vector<ModularValue> cp{ModularValue::constant(1, prec)};
  for (int i = 1; i <= dx; ++i) jp.push_back(jp.back() * at.j);
  for (int i = 1; i <= dy; ++i) cp.push_back(cp.back() * at.chi_star);
  std::optional<ModularValue> sum;
  for (const auto& [m, c] : p.terms()) {
    ModularValue t = ModularValue::constant(c, prec);
    if (m.x_deg > 0) t = t * jp[static_cast<std::size_t>(m.x_deg)];
    if (m.y_deg > 0) t = t * cp[static_cast<std::size_t>(m.y_deg)];
    sum = sum ? *sum + t : t;
  }
  return *sum;
}

ModularValue eval_f(const RationalFunction2& f, const BigComplex& tau, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionContext c = ctx;
  // The original attempt plus two escalations.
  for (int attempt = 0; attempt < 3; ++attempt) {
    JChiValues at = eval_j_chi(tau, c);
    const mpfr_prec_t w = at.j.precision();
    ModularValue den = eval_poly(f.denominator(), at, w);
    if (!den.may_be_zero() && !is_numerically_zero(den.value, c)) {
      ModularValue num = eval_poly(f.numerator(), at, w);
      try {
        return num / den;
      } catch (const PrecisionFault&) {
      }
    }
    if (!c.can_double()) break;
    c = c.doubled();
  }
  throw PoleAtPoint("PoleAtPoint: denominator of " + f.to_string() + " vanishes at tau = " +
                    tau.to_string(20));
}

JacobianSample jacobian(const RationalFunction2& f, const BigComplex& tau, const PrecisionContext& ctx,
                        std::optional<long> step_log2) {
  if (is_constant(f)) throw NonconstantRequired("jacobian: f must be nonconstant");
  const mpfr_prec_t w = ctx.working_bits();
  const long e = step_log2 ? *step_log2 : -(ctx.prec_bits / 3);
  BigFloat h = BigFloat::pow2(e, w);
  BigComplex t = tau.rounded(std::max(w, tau.precision()));
  BigComplex dx_shift = BigComplex::from_real(h);
  BigComplex dy_shift(BigFloat(w), h);

  ModularValue fxp = eval_f(f, t + dx_shift, ctx);
  ModularValue fxm = eval_f(f, t - dx_shift, ctx);
  ModularValue fyp = eval_f(f, t + dy_shift, ctx);
  ModularValue fym = eval_f(f, t - dy_shift, ctx);

  BigFloat two_h = h * 2L;
  BigComplex dfdx = fxp.value - fxm.value;
  dfdx.re() /= two_h;
  dfdx.im() /= two_h;
  BigComplex dfdy = fyp.value - fym.value;
  dfdy.re() /= two_h;
  dfdy.im() /= two_h;

  BigFloat det = dfdx.re() * dfdy.im() - dfdy.re() * dfdx.im();
  return JacobianSample{std::move(t), std::move(det), std::move(h), 2};
}

JacobianScan jacobian_scan(const RationalFunction2& f, const BigFloat& y_min, const BigFloat& y_max,
                           int samples, const PrecisionContext& ctx) {
  const mpfr_prec_t w = ctx.working_bits();
  const BigFloat half_sqrt3 = sqrt(BigFloat(3L, w)) / 2L;
  if (samples < 1) throw std::invalid_argument("jacobian_scan: samples must be >= 1");
  if (!(y_min > half_sqrt3)) throw std::invalid_argument("jacobian_scan: y_min must exceed sqrt(3)/2");
  if (y_max < y_min) throw std::invalid_argument("jacobian_scan: empty y range");
  if (is_constant(f)) throw NonconstantRequired("jacobian_scan: f must be nonconstant");

  JacobianScan scan;
  scan.all_nonzero = true;
  const BigFloat lo = y_min.rounded(w);
  const BigFloat width = y_max.rounded(w) - lo;
  const BigFloat threshold = zero_threshold(ctx);
  for (int k = 0; k < samples; ++k) {
    JacobianScanEntry entry;
    entry.y = samples == 1 ? lo : lo + width * static_cast<long>(k) / static_cast<long>(samples - 1);
    const BigComplex tau(BigFloat(w), entry.y);
    try {
      JacobianSample s = jacobian(f, tau, ctx);
      entry.nonzero = abs(s.jacobian_value) > threshold;
      entry.sample = std::move(s);
    } catch (const PoleAtPoint&) {
      entry.pole = true;
    }
    scan.any_nonzero = scan.any_nonzero || entry.nonzero;
    scan.all_nonzero = scan.all_nonzero && entry.nonzero;
    scan.entries.push_back(std::move(entry));
  }
  return scan;
}

}  // namespace ahm
