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

#include "ahm/classpoly.hpp"
#include "ahm/errors.hpp"

namespace ahm {

std::optional<mpq_class> try_rational_reconstruct(const BigFloat& x, const mpz_class& denom_bound) {
  if (denom_bound < 1) throw std::invalid_argument("rational_reconstruct: denominator bound must be >= 1");
  if (!x.is_finite()) return std::nullopt;
  const mpq_class v = x.to_mpq();

  // Only a convergent can satisfy |x - p/q| < 1/(2 q^2), which the target
  // inequality implies, and at most one fraction satisfies it.
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class p_prev = 0, q_prev = 1, p_cur = 1, q_cur = 0;
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    if (q_next > denom_bound) return std::nullopt;
    mpq_class cand(p_next, q_next);
    cand.canonicalize();
    mpq_class diff = abs(v - cand);
    if (diff * 2 * q_next * denom_bound < 1) return cand;
    mpz_class r = num - a * den;
    if (r == 0) return std::nullopt;
    num = den;
    den = r;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
}

mpq_class rational_reconstruct(const BigFloat& x, const mpz_class& denom_bound) {
  if (auto r = try_rational_reconstruct(x, denom_bound)) return *r;
  throw ReconstructionFailed("no rational with denominator <= " + denom_bound.get_str() + " near " +
                             x.to_string(30));
}

}  // namespace ahm
