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

#ifndef AHM_POLYFACTOR_HPP
#define AHM_POLYFACTOR_HPP

// Exact univariate polynomial algebra over Z and Q: subresultant gcd,
// squarefree parts, perfect-power decomposition h = p^k, and irreducibility
// certificates (a factor-degree sieve over large primes, with Zassenhaus
// factorization as the deciding fallback).

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ahm/errors.hpp"

namespace ahm {

// Dense polynomial with integer coefficients in ascending order of degree.
// The zero polynomial has no coefficients and degree -1.
class IntegerPoly {
 public:
  IntegerPoly() = default;
  explicit IntegerPoly(std::vector<mpz_class> coeffs);
  IntegerPoly(std::initializer_list<long> coeffs);
  static IntegerPoly monomial(const mpz_class& c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  // Coefficient of x^i, zero beyond the degree.
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;

  IntegerPoly& operator+=(const IntegerPoly& rhs);
  IntegerPoly& operator-=(const IntegerPoly& rhs);
  IntegerPoly& operator*=(const mpz_class& s);
  friend IntegerPoly operator+(IntegerPoly a, const IntegerPoly& b) { return a += b; }
  friend IntegerPoly operator-(IntegerPoly a, const IntegerPoly& b) { return a -= b; }
  friend IntegerPoly operator*(const IntegerPoly& a, const IntegerPoly& b);
  friend IntegerPoly operator*(IntegerPoly a, const mpz_class& s) { return a *= s; }
  IntegerPoly operator-() const;
  friend bool operator==(const IntegerPoly& a, const IntegerPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

IntegerPoly derivative(const IntegerPoly& p);
IntegerPoly pow(const IntegerPoly& p, unsigned k);
// Positive gcd of the coefficients; 0 for the zero polynomial.
mpz_class content(const IntegerPoly& p);
// p / content(p), with positive leading coefficient.
IntegerPoly primitive_part(const IntegerPoly& p);
// a / b when b divides a in Z[x]; std::nullopt otherwise.
std::optional<IntegerPoly> try_divide(const IntegerPoly& a, const IntegerPoly& b);
// Throws NotDivisible.
IntegerPoly exact_divide(const IntegerPoly& a, const IntegerPoly& b);
// lc(b)^{deg a - deg b + 1} a  mod  b
IntegerPoly pseudo_remainder(const IntegerPoly& a, const IntegerPoly& b);
// Via the subresultant remainder sequence; primitive with positive leading
// coefficient. gcd(0, 0) = 0.
IntegerPoly gcd(const IntegerPoly& a, const IntegerPoly& b);
// h / gcd(h, h'), primitive. Requires deg h >= 1.
IntegerPoly squarefree_part(const IntegerPoly& h);

// Primitive integer polynomial proportional to the rational polynomial.
IntegerPoly clear_denominators(const std::vector<mpq_class>& coeffs);
// p / lc(p).
std::vector<mpq_class> to_monic_rational(const IntegerPoly& p);

struct PowerDecomposition {
  IntegerPoly base;  // primitive, positive leading coefficient
  int exponent = 1;
};

// h = base^exponent with base = squarefree_part(h). Throws NotAPerfectPower
// when h is not a power of its squarefree part.
PowerDecomposition perfect_power_decompose(const IntegerPoly& h);

enum class Verdict { irreducible, reducible };
enum class CertificateMethod { degree_pattern_sieve, full_factorization };

std::string to_string(Verdict v);
std::string to_string(CertificateMethod m);

struct SieveWitness {
  std::uint64_t prime;
  std::vector<int> factor_degrees;  // sorted ascending
};

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::irreducible;
  CertificateMethod method = CertificateMethod::degree_pattern_sieve;
  std::vector<SieveWitness> sieve;
  std::optional<IntegerPoly> factor;  // a proper factor when reducible
};

inline constexpr int kSievePrimes = 20;
inline constexpr std::uint64_t kSieveFirstPrime = 10007;

// Factors p modulo up to `max_primes` good primes starting at `first_prime`
// and intersects the attainable subset sums of the factor degrees. Returns
// an irreducible certificate when only {0, deg p} survives, else nullopt.
std::optional<IrreducibilityCertificate> degree_pattern_sieve(const IntegerPoly& p,
                                                              int max_primes = kSievePrimes,
                                                              std::uint64_t first_prime = kSieveFirstPrime);

// Irreducible factors of a primitive squarefree polynomial, each primitive
// with positive leading coefficient, sorted by (degree, coefficients).
std::vector<IntegerPoly> factor_squarefree(const IntegerPoly& p);

// Decides irreducibility over Q by full factorization.
IrreducibilityCertificate full_factorization_certificate(const IntegerPoly& p);

// Sieve first, full factorization when the sieve is inconclusive.
// Requires deg p >= 1; the content of p is ignored.
IrreducibilityCertificate is_irreducible(const IntegerPoly& p);

}  // namespace ahm

#endif  // AHM_POLYFACTOR_HPP
