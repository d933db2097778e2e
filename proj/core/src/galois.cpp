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
#include <utility>

#include "ahm/analysis.hpp"
#include "ahm/errors.hpp"

namespace ahm {

namespace {

struct Interpolant {
  std::vector<mpq_class> coeffs;
  BigFloat residual = bound::zero();
};

// Newton divided differences, then expansion into the monomial basis, with
// certified error bounds throughout. Division by a node difference that is
// not provably nonzero raises PrecisionFault.
std::vector<ModularValue> interpolate(const std::vector<ModularValue>& x, std::vector<ModularValue> d) {
  const std::size_t n = x.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) d[i] = (d[i] - d[i - 1]) / (x[i] - x[i - level]);
  const mpfr_prec_t w = x.front().precision();
  std::vector<ModularValue> poly{d[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<ModularValue> next(poly.size() + 1, ModularValue::constant(0, w));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * x[k];
    }
    next[0] = next[0] + d[k];
    poly = std::move(next);
  }
  return poly;
}

std::optional<Interpolant> rationalize(const std::vector<ModularValue>& coeffs, const PrecisionContext& ctx) {
  Interpolant out;
  for (const ModularValue& c : coeffs) {
    BigFloat r = bound::zero();
    auto q = reconstruct_coefficient(c.value, c.certified_abs_error, ctx, &r);
    if (!q) return std::nullopt;
    out.residual = max(out.residual, r);
    out.coeffs.push_back(*std::move(q));
  }
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

}  // namespace

GaloisCheckReport galois_interpolation_check(const Discriminant& delta, const PrecisionContext& ctx,
                                             const GaloisOptions& options) {
  ctx.validate();
  const std::vector<QuadForm> forms = enumerate_reduced(delta);
  GaloisCheckReport rep;
  rep.delta = delta.value();
  rep.class_number = static_cast<int>(forms.size());
  rep.adversarial = options.adversarial;
  if (options.adversarial && forms.size() < 3)
    throw std::invalid_argument("adversarial permutation needs class number >= 3");

  PrecisionContext start = ctx;
  if (options.use_heuristic) {
    const int room = ctx.max_prec_bits - ctx.guard_bits;
    start.prec_bits = std::max(ctx.prec_bits, std::min(suggested_precision(RationalFunction2::j(), delta), room));
  }

  int last_prec = start.prec_bits;
  try {
    auto result = with_escalation(
        [&](const PrecisionContext& c) -> std::optional<std::pair<Interpolant, int>> {
          last_prec = c.prec_bits;
          std::vector<ModularValue> x;
          std::vector<ModularValue> y;
          for (const QuadForm& q : forms) {
            JChiValues v = eval_j_chi(heegner_point(q, c), c);
            x.push_back(std::move(v.j));
            y.push_back(std::move(v.chi_star));
          }
          if (options.adversarial) std::swap(y[0], y[1]);
          for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t k = i + 1; k < x.size(); ++k)
              if (is_numerically_zero(x[i].value - x[k].value, c))
                throw DuplicateNodes("j values of " + forms[i].to_string() + " and " + forms[k].to_string() +
                                     " coincide numerically");
          auto r = rationalize(interpolate(x, y), c);
          if (!r) return std::nullopt;
          return std::make_pair(*std::move(r), c.prec_bits);
        },
        start);
    rep.pass = true;
    rep.interpolant = std::move(result.first.coeffs);
    rep.residual = std::move(result.first.residual);
    rep.prec_used = result.second;
    rep.detail = "interpolant coefficients are rational";
  } catch (const PrecisionExhausted& e) {
    rep.pass = false;
    rep.prec_used = last_prec;
    rep.detail = e.what();
  }
  return rep;
}

}  // namespace ahm
