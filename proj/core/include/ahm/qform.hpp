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

#ifndef AHM_QFORM_HPP
#define AHM_QFORM_HPP

// Positive definite binary quadratic forms Ax^2 + Bxy + Cy^2, their Gauss
// reduction, enumeration of reduced forms of a discriminant, and the
// associated Heegner points.

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "ahm/numerics.hpp"

namespace ahm {

struct QuadForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
  std::string to_string() const;
};

// A negative integer congruent to 0 or 1 mod 4.
class Discriminant {
 public:
  // Throws InvalidDiscriminant.
  explicit Discriminant(std::int64_t delta);
  static bool is_valid(std::int64_t delta) noexcept;

  std::int64_t value() const noexcept { return delta_; }
  // D = |delta|
  std::int64_t abs() const noexcept { return -delta_; }
  // Not of the form m^2 * d0 with d0 a smaller discriminant.
  bool is_fundamental() const noexcept;

  friend auto operator<=>(const Discriminant&, const Discriminant&) = default;

 private:
  std::int64_t delta_;
};

std::int64_t discriminant(const QuadForm& f) noexcept;
bool is_positive_definite(const QuadForm& f) noexcept;
bool is_primitive(const QuadForm& f) noexcept;

// |B| <= A <= C, with B >= 0 whenever |B| = A or A = C.
bool is_reduced(const QuadForm& f) noexcept;

// The unique reduced form SL2(Z)-equivalent to f. Requires f positive definite.
QuadForm reduce(QuadForm f);

// Primitive reduced forms of discriminant delta with level | A, sorted by (A, B).
std::vector<QuadForm> enumerate_reduced(const Discriminant& delta, std::int64_t level = 1);

int class_number(const Discriminant& delta);

// The root of A t^2 + B t + C in the upper half plane, (-B + i sqrt(D)) / (2A),
// computed at ctx.working_bits().
BigComplex heegner_point(const QuadForm& f, const PrecisionContext& ctx);

}  // namespace ahm

#endif  // AHM_QFORM_HPP
