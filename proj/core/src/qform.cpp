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

#include "ahm/qform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ahm {

std::string QuadForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool Discriminant::is_valid(std::int64_t delta) noexcept {
  if (delta >= 0) return false;
  const std::int64_t r = ((delta % 4) + 4) % 4;
  return r == 0 || r == 1;
}

Discriminant::Discriminant(std::int64_t delta) : delta_(delta) {
  if (!is_valid(delta)) throw InvalidDiscriminant(delta);
}

namespace {
bool squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}
}  // namespace

bool Discriminant::is_fundamental() const noexcept {
  const std::int64_t d = -delta_;
  if (((delta_ % 4) + 4) % 4 == 1) return squarefree(d);
  const std::int64_t m = d / 4;
  // delta/4 must be 2 or 3 mod 4, i.e. -m is 2 or 3 mod 4
  const std::int64_t r = ((-m % 4) + 4) % 4;
  return (r == 2 || r == 3) && squarefree(m);
}

std::int64_t discriminant(const QuadForm& f) noexcept { return f.b * f.b - 4 * f.a * f.c; }

bool is_positive_definite(const QuadForm& f) noexcept { return f.a > 0 && discriminant(f) < 0; }

bool is_primitive(const QuadForm& f) noexcept {
  return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

bool is_reduced(const QuadForm& f) noexcept {
  const std::int64_t ab = f.b < 0 ? -f.b : f.b;
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

QuadForm reduce(QuadForm f) {
  if (!is_positive_definite(f)) {
    throw std::invalid_argument("reduce: form " + f.to_string() + " is not positive definite");
  }
  while (true) {
    // Translate so that -A < B <= A: x -> x + n y, B -> B + 2nA.
    if (f.b > f.a || f.b <= -f.a) {
      const std::int64_t two_a = 2 * f.a;
      // n = floor((A - B) / 2A)
      std::int64_t num = f.a - f.b;
      std::int64_t n = num >= 0 ? num / two_a : -((-num + two_a - 1) / two_a);
      const std::int64_t b_new = f.b + two_a * n;
      f.c = f.a * n * n + f.b * n + f.c;
      f.b = b_new;
    }
    if (f.a > f.c) {
      // (A, B, C) -> (C, -B, A)
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
    return f;
  }
}

std::vector<QuadForm> enumerate_reduced(const Discriminant& delta, std::int64_t level) {
  if (level < 1) throw std::invalid_argument("enumerate_reduced: level must be positive");
  const std::int64_t d = delta.abs();
  std::vector<QuadForm> out;
  // Reduced forms satisfy 3A^2 <= D.
  for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
    if (a % level != 0) continue;
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + d;
      if (num % (4 * a) != 0) continue;
      const QuadForm f{a, b, num / (4 * a)};
      if (is_reduced(f) && is_primitive(f)) out.push_back(f);
    }
  }
  return out;
}

int class_number(const Discriminant& delta) {
  return static_cast<int>(enumerate_reduced(delta, 1).size());
}

BigComplex heegner_point(const QuadForm& f, const PrecisionContext& ctx) {
  if (!is_positive_definite(f)) {
    throw std::invalid_argument("heegner_point: form " + f.to_string() + " is not positive definite");
  }
  const mpfr_prec_t w = ctx.working_bits();
  const long two_a = 2 * f.a;
  BigFloat re(-f.b, w);
  re /= two_a;
  BigFloat im = sqrt(BigFloat(-discriminant(f), w));
  im /= two_a;
  return {std::move(re), std::move(im)};
}

}  // namespace ahm
