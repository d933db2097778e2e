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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ahm/classpoly.hpp"
#include "ahm/errors.hpp"

namespace ahm {

namespace {

// |z| rounded up, with slack for the rounding of abs itself.
BigFloat magnitude(const BigComplex& z) { return bound::scale(bound::of(abs(z)), 1.0 + 0x1p-50); }

}  // namespace

std::vector<HeegnerValue> heegner_values(const RationalFunction2& f, const Discriminant& delta,
                                         const PrecisionContext& ctx) {
  std::vector<HeegnerValue> out;
  for (const QuadForm& q : enumerate_reduced(delta)) {
    BigComplex tau = heegner_point(q, ctx);
    try {
      ModularValue v = eval_f(f, tau, ctx);
      out.push_back({q, std::move(tau), std::move(v)});
    } catch (const PoleAtPoint&) {
      throw PoleAtHeegnerPoint(q.a, q.b, q.c);
    }
  }
  return out;
}

ComplexPoly expand_roots(const std::vector<ModularValue>& roots) {
  mpfr_prec_t w = 64;
  for (const auto& r : roots) w = std::max(w, r.precision());
  const BigFloat u = bound::unit(w - 1);

  ComplexPoly h;
  h.coeffs.push_back(BigComplex::from_real(BigFloat(1L, w)));
  h.errors.push_back(bound::zero());
  for (const auto& root : roots) {
    const BigComplex& v = root.value;
    const BigFloat& e = root.certified_abs_error;
    const BigFloat mv = magnitude(v);
    const std::size_t m = h.coeffs.size();
    std::vector<BigComplex> c(m + 1, BigComplex(w));
    std::vector<BigFloat> err(m + 1, bound::zero());
    c[m] = BigComplex::from_real(BigFloat(1L, w));
    for (std::size_t k = 0; k < m; ++k) {
      // new_k = old_{k-1} - v old_k
      const BigComplex prod = v * h.coeffs[k];
      const BigFloat mc = magnitude(h.coeffs[k]);
      BigFloat ek = bound::add(bound::mul(mv, h.errors[k]), bound::mul(e, bound::add(mc, h.errors[k])));
      BigFloat rnd = bound::scale(bound::mul(mv, mc), 5.0);
      if (k > 0) {
        c[k] = h.coeffs[k - 1] - prod;
        ek = bound::add(ek, h.errors[k - 1]);
        rnd = bound::add(rnd, bound::scale(magnitude(h.coeffs[k - 1]), 2.0));
      } else {
        c[k] = -prod;
      }
      err[k] = bound::add(ek, bound::mul(u, rnd));
    }
    h.coeffs = std::move(c);
    h.errors = std::move(err);
  }
  return h;
}

ComplexPoly build_class_poly(const RationalFunction2& f, const Discriminant& delta,
                             const PrecisionContext& ctx) {
  if (is_constant(f)) throw NonconstantRequired("class polynomial of a constant function");
  ctx.validate();
  std::vector<ModularValue> roots;
  for (auto& hv : heegner_values(f, delta, ctx)) roots.push_back(std::move(hv.value));
  return expand_roots(roots);
}

std::optional<mpq_class> reconstruct_coefficient(const BigComplex& c, const BigFloat& certified_error,
                                                 const PrecisionContext& ctx, BigFloat* residual) {
  const BigFloat gate = bound::unit(ctx.prec_bits / 2 + kReconstructionMarginBits);
  const BigFloat& e = certified_error;
  if (!(e < gate)) return std::nullopt;
  if (abs(c.im()) > e) return std::nullopt;
  mpz_class denom_bound;
  mpz_ui_pow_ui(denom_bound.get_mpz_t(), 2, static_cast<unsigned long>(ctx.prec_bits / 4));
  auto q = try_rational_reconstruct(c.re(), denom_bound);
  if (!q) return std::nullopt;
  const BigFloat dr(mpq_class(c.re().to_mpq() - *q), 64);
  if (abs(dr) > e) return std::nullopt;
  if (residual) *residual = bound::of(abs(BigComplex(dr, c.im().rounded(64))));
  return q;
}

std::optional<RationalPoly> try_rationalize_poly(const ComplexPoly& h, const PrecisionContext& ctx) {
  if (h.coeffs.empty() || h.coeffs.size() != h.errors.size())
    throw std::invalid_argument("rationalize_poly: malformed polynomial");
  if (!(h.coeffs.back().re() == 1L) || !h.coeffs.back().im().is_zero())
    throw std::invalid_argument("rationalize_poly: polynomial is not monic");
  RationalPoly out;
  for (std::size_t i = 0; i + 1 < h.coeffs.size(); ++i) {
    BigFloat r = bound::zero();
    auto q = reconstruct_coefficient(h.coeffs[i], h.errors[i], ctx, &r);
    if (!q) return std::nullopt;
    out.residual = max(out.residual, r);
    out.coeffs.push_back(*std::move(q));
  }
  out.coeffs.emplace_back(1);
  return out;
}

RationalPoly rationalize_poly(const ComplexPoly& h, const PrecisionContext& ctx) {
  if (auto r = try_rationalize_poly(h, ctx)) return *std::move(r);
  throw PrecisionExhausted("PrecisionExhausted: class polynomial coefficients do not rationalize at " +
                           std::to_string(ctx.prec_bits) + " bits");
}

int suggested_precision(const RationalFunction2& f, const Discriminant& delta) {
  double inv_a = 0.0;
  for (const QuadForm& q : enumerate_reduced(delta)) inv_a += 1.0 / static_cast<double>(q.a);
  const double d = std::max(1, f.degree());
  const double bits = std::numbers::pi * std::sqrt(static_cast<double>(delta.abs())) * inv_a * d / std::numbers::ln2;
  const double need = 2.0 * bits + 128.0;
  int p = 256;
  while (p < need) p *= 2;
  return p;
}

ExactClassPoly exact_class_poly(const RationalFunction2& f, const Discriminant& delta,
                                const PrecisionContext& ctx, bool use_heuristic) {
  ctx.validate();
  if (is_constant(f)) throw NonconstantRequired("class polynomial of a constant function");
  PrecisionContext start = ctx;
  if (use_heuristic) {
    const int room = ctx.max_prec_bits - ctx.guard_bits;
    start.prec_bits = std::max(ctx.prec_bits, std::min(suggested_precision(f, delta), room));
  }
  return with_escalation(
      [&](const PrecisionContext& c) -> std::optional<ExactClassPoly> {
        ComplexPoly h = build_class_poly(f, delta, c);
        auto r = try_rationalize_poly(h, c);
        if (!r) return std::nullopt;
        return ExactClassPoly{*std::move(r), c.prec_bits};
      },
      start);
}

BigComplex evaluate(const RationalPoly& h, const BigComplex& x) {
  const mpfr_prec_t w = x.precision();
  BigComplex acc(w);
  for (std::size_t i = h.coeffs.size(); i-- > 0;) {
    acc = acc * x;
    acc.re() += BigFloat(h.coeffs[i], w);
  }
  return acc;
}

}  // namespace ahm
