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

#ifndef AHM_CLASSPOLY_HPP
#define AHM_CLASSPOLY_HPP

// Class polynomials H(x) = prod_Q (x - f(tau_Q)) over the reduced forms of a
// discriminant, and their exact reconstruction over Q.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ahm/ahm_eval.hpp"
#include "ahm/numerics.hpp"
#include "ahm/qform.hpp"

namespace ahm {

// Monic complex polynomial, coefficients in ascending degree, each with a
// certified absolute error bound.
struct ComplexPoly {
  std::vector<BigComplex> coeffs;
  std::vector<BigFloat> errors;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

// Monic rational polynomial in ascending degree. `residual` is the largest
// distance between a reconstructed coefficient and its complex approximation.
struct RationalPoly {
  std::vector<mpq_class> coeffs;
  BigFloat residual = bound::zero();

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

struct HeegnerValue {
  QuadForm form;
  BigComplex tau;
  ModularValue value;
};

// f(tau_Q) for every Q in enumerate_reduced(delta). Throws
// PoleAtHeegnerPoint naming the first offending form.
std::vector<HeegnerValue> heegner_values(const RationalFunction2& f, const Discriminant& delta,
                                         const PrecisionContext& ctx);

// prod (x - r) expanded by repeated monic multiplication in the given order.
ComplexPoly expand_roots(const std::vector<ModularValue>& roots);

// Throws NonconstantRequired, PoleAtHeegnerPoint.
ComplexPoly build_class_poly(const RationalFunction2& f, const Discriminant& delta,
                             const PrecisionContext& ctx);

// p/q with 1 <= q <= denom_bound and |x - p/q| < 1/(2 q denom_bound). Such a
// fraction is unique when it exists. Throws ReconstructionFailed.
mpq_class rational_reconstruct(const BigFloat& x, const mpz_class& denom_bound);
std::optional<mpq_class> try_rational_reconstruct(const BigFloat& x, const mpz_class& denom_bound);

// Every real lies within 1/(q 2^{prec/4}) of some p/q with q <= 2^{prec/4},
// so closeness alone proves nothing at the 2^{-prec/2} scale. A value c with
// certified error e is accepted as p/q only when q <= 2^{prec/4},
// e < 2^{-prec/2 - kReconstructionMarginBits}, and both |Re c - p/q| and
// |Im c| are at most e. A non-rational c then passes with probability about
// 2^{-kReconstructionMarginBits}.
inline constexpr int kReconstructionMarginBits = 32;

// On success `residual` (if given) receives |c - p/q|, rounded up.
std::optional<mpq_class> reconstruct_coefficient(const BigComplex& c, const BigFloat& certified_error,
                                                 const PrecisionContext& ctx, BigFloat* residual = nullptr);

// Single attempt at ctx.prec_bits, coefficient by coefficient as in
// reconstruct_coefficient.
std::optional<RationalPoly> try_rationalize_poly(const ComplexPoly& h, const PrecisionContext& ctx);

// Throws PrecisionExhausted when the coefficients do not rationalize: the
// input carries fixed precision, so there is nothing to escalate here.
// exact_class_poly escalates by recomputing the roots.
RationalPoly rationalize_poly(const ComplexPoly& h, const PrecisionContext& ctx);

// Starting precision for f at delta: twice the bit size of the largest
// expected coefficient, from |f(tau_Q)| ~ exp(pi sqrt(D) deg(f) / A), plus
// margin; a power-of-two multiple of 256.
int suggested_precision(const RationalFunction2& f, const Discriminant& delta);

struct ExactClassPoly {
  RationalPoly h;
  int prec_used = 0;
};

// Build and rationalize, doubling precision until reconstruction succeeds.
// The first attempt uses max(ctx.prec_bits, suggested_precision) when
// `use_heuristic` is set. Throws PrecisionExhausted, PoleAtHeegnerPoint.
ExactClassPoly exact_class_poly(const RationalFunction2& f, const Discriminant& delta,
                                const PrecisionContext& ctx, bool use_heuristic = true);

// H(x) at a complex point, evaluated exactly in the coefficients.
BigComplex evaluate(const RationalPoly& h, const BigComplex& x);

}  // namespace ahm

#endif  // AHM_CLASSPOLY_HPP
