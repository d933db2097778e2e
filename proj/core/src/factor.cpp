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

#include <algorithm>
#include <cmath>

#include "ahm/errors.hpp"
#include "ahm/polyfactor.hpp"
#include "modp_poly.hpp"

namespace ahm {

namespace {

using modp::u64;

// Polynomials with coefficients reduced into [0, m).
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return zreduce(std::move(out), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return zreduce(std::move(out), m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return zreduce(std::move(out), m);
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class t = r[i];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    if (t == 0) continue;
    q[i - db] = t;
    for (std::size_t k = 0; k <= db; ++k) {
      r[i - db + k] -= t * b[k];
      mpz_fdiv_r(r[i - db + k].get_mpz_t(), r[i - db + k].get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(db);
  return {zreduce(std::move(q), m), zreduce(std::move(r), m)};
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZPoly zmonic(const ZPoly& a, const mpz_class& m) {
  mpz_class li;
  if (mpz_invert(li.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("leading coefficient is not a unit in the lifting modulus");
  ZPoly out = a;
  for (auto& c : out) c *= li;
  return zreduce(std::move(out), m);
}

struct Lifted {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2: f = g h, s g + t h = 1,
// h monic.
Lifted hensel_step(const ZPoly& f, const Lifted& in, const mpz_class& m) {
  const mpz_class m2 = m * m;
  const ZPoly e = zsub(zreduce(f, m2), zmul(in.g, in.h, m2), m2);
  auto [q, r] = zdivrem(zmul(in.s, e, m2), in.h, m2);
  Lifted out;
  out.g = zadd(zadd(in.g, zmul(in.t, e, m2), m2), zmul(q, in.g, m2), m2);
  out.h = zadd(in.h, r, m2);
  const ZPoly b = zsub(zadd(zmul(in.s, out.g, m2), zmul(in.t, out.h, m2), m2), ZPoly{1}, m2);
  auto [c, d] = zdivrem(zmul(in.s, b, m2), out.h, m2);
  out.s = zsub(in.s, d, m2);
  out.t = zsub(zsub(in.t, zmul(in.t, b, m2), m2), zmul(c, out.g, m2), m2);
  return out;
}

// Lifts the factorization f = lc(f) * prod(facs) mod p to mod p^(2^steps)
// through a balanced factor tree; returns monic lifted factors in order.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<modp::Poly>& facs, u64 p, int steps,
                              const mpz_class& modulus) {
  if (facs.size() == 1) return {zmonic(zreduce(f, modulus), modulus)};
  const std::size_t mid = facs.size() / 2;
  mpz_class lc_mod;
  mpz_fdiv_r_ui(lc_mod.get_mpz_t(), f.back().get_mpz_t(), p);
  modp::Poly g0{lc_mod.get_ui()};
  for (std::size_t i = 0; i < mid; ++i) g0 = modp::mul(g0, facs[i], p);
  modp::Poly h0{1};
  for (std::size_t i = mid; i < facs.size(); ++i) h0 = modp::mul(h0, facs[i], p);
  const modp::Bezout st = modp::bezout(g0, h0, p);

  Lifted cur{from_modp(g0), from_modp(h0), from_modp(st.s), from_modp(st.t)};
  mpz_class m(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) {
    cur = hensel_step(f, cur, m);
    m *= m;
  }
  std::vector<modp::Poly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(mid));
  std::vector<modp::Poly> right(facs.begin() + static_cast<std::ptrdiff_t>(mid), facs.end());
  std::vector<ZPoly> out = multi_lift(cur.g, left, p, steps, modulus);
  std::vector<ZPoly> r = multi_lift(cur.h, right, p, steps, modulus);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

IntegerPoly symmetric(const ZPoly& a, const mpz_class& m) {
  const mpz_class half = m / 2;
  std::vector<mpz_class> out = a;
  for (auto& c : out)
    if (c > half) c -= m;
  return IntegerPoly(std::move(out));
}

// Landau-Mignotte: every factor of f has coefficients bounded by
// sqrt(n+1) 2^n |f|_inf; the extra lc factor covers the scaled candidates.
mpz_class factor_coefficient_bound(const IntegerPoly& f) {
  mpz_class a = 0;
  for (const auto& c : f.coeffs()) a = std::max(a, mpz_class(abs(c)));
  const int n = f.degree();
  mpz_class root;
  mpz_class n1 = n + 1;
  mpz_sqrt(root.get_mpz_t(), n1.get_mpz_t());
  root += 1;
  mpz_class b = root * a * abs(f.leading());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return b;
}

bool good_prime(const IntegerPoly& f, u64 p, modp::Poly& fp_monic) {
  modp::Poly fp = modp::reduce(f, p);
  if (modp::deg(fp) != f.degree()) return false;
  fp_monic = modp::monic(fp, p);
  return modp::is_squarefree(fp_monic, p);
}

bool poly_less(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs()[static_cast<std::size_t>(i)], b.coeffs()[static_cast<std::size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<IntegerPoly> zassenhaus(const IntegerPoly& f) {
  // Pick the prime with the fewest modular factors among a few good ones.
  constexpr int kCandidates = 6;
  u64 best_p = 0;
  modp::Poly best_fp;
  std::size_t best_r = 0;
  u64 cand = kSieveFirstPrime;
  for (int found = 0, tried = 0; found < kCandidates && tried < 1000; ++tried) {
    cand = modp::next_prime(cand);
    modp::Poly fp;
    if (good_prime(f, cand, fp)) {
      ++found;
      const std::size_t r = modp::factor_degrees(fp, cand).size();
      if (best_p == 0 || r < best_r) {
        best_p = cand;
        best_fp = fp;
        best_r = r;
      }
      if (r == 1) break;
    }
    ++cand;
  }
  if (best_p == 0) throw DomainError("no good prime found for factorization");
  if (best_r == 1) return {f};

  const u64 p = best_p;
  std::vector<modp::Poly> facs = modp::factor_squarefree_monic(best_fp, p);

  const mpz_class bound = factor_coefficient_bound(f);
  int steps = 0;
  mpz_class modulus(static_cast<unsigned long>(p));
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted = multi_lift(f.coeffs(), facs, p, steps, modulus);

  std::vector<IntegerPoly> found;
  IntegerPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly prod{mpz_class(rest.leading())};
      prod = zreduce(prod, modulus);
      for (std::size_t i : idx) prod = zmul(prod, lifted[i], modulus);
      IntegerPoly cand_factor = primitive_part(symmetric(prod, modulus));
      if (cand_factor.degree() >= 1) {
        if (auto q = try_divide(rest, cand_factor)) {
          found.push_back(cand_factor);
          rest = primitive_part(*q);
          for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() >= 1) found.push_back(rest);
  std::sort(found.begin(), found.end(), poly_less);
  return found;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::irreducible ? "irreducible" : "reducible"; }

std::string to_string(CertificateMethod m) {
  return m == CertificateMethod::degree_pattern_sieve ? "degree-pattern-sieve" : "full-factorization";
}

std::optional<IrreducibilityCertificate> degree_pattern_sieve(const IntegerPoly& p, int max_primes,
                                                              u64 first_prime) {
  const IntegerPoly f = primitive_part(p);
  const int n = f.degree();
  if (n < 1) throw DomainError("irreducibility test requires degree >= 1");
  IrreducibilityCertificate cert;
  cert.verdict = Verdict::irreducible;
  cert.method = CertificateMethod::degree_pattern_sieve;
  if (n == 1) return cert;

  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  u64 cand = first_prime;
  int used = 0;
  for (int tried = 0; used < max_primes && tried < 50 * max_primes; ++tried) {
    cand = modp::next_prime(cand);
    modp::Poly fp;
    if (good_prime(f, cand, fp)) {
      std::vector<int> degs = modp::factor_degrees(fp, cand);
      std::vector<char> sums(static_cast<std::size_t>(n) + 1, 0);
      sums[0] = 1;
      for (int d : degs)
        for (int s = n; s >= d; --s)
          if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = 1;
      for (int s = 0; s <= n; ++s) alive[static_cast<std::size_t>(s)] &= sums[static_cast<std::size_t>(s)];
      cert.sieve.push_back({cand, std::move(degs)});
      ++used;
      if (std::count(alive.begin(), alive.end(), 1) == 2) return cert;
    }
    ++cand;
  }
  return std::nullopt;
}

std::vector<IntegerPoly> factor_squarefree(const IntegerPoly& p) {
  const IntegerPoly f = primitive_part(p);
  if (f.degree() < 1) throw DomainError("factorization requires degree >= 1");
  if (f.degree() == 1) return {f};
  return zassenhaus(f);
}

IrreducibilityCertificate full_factorization_certificate(const IntegerPoly& p) {
  const IntegerPoly f = primitive_part(p);
  if (f.degree() < 1) throw DomainError("irreducibility test requires degree >= 1");
  IrreducibilityCertificate cert;
  cert.method = CertificateMethod::full_factorization;
  if (f.degree() == 1) {
    cert.verdict = Verdict::irreducible;
    return cert;
  }
  IntegerPoly g = gcd(f, derivative(f));
  if (g.degree() >= 1) {
    cert.verdict = Verdict::reducible;
    cert.factor = g;
    return cert;
  }
  std::vector<IntegerPoly> factors = factor_squarefree(f);
  if (factors.size() == 1) {
    cert.verdict = Verdict::irreducible;
  } else {
    cert.verdict = Verdict::reducible;
    cert.factor = factors.front();
  }
  return cert;
}

IrreducibilityCertificate is_irreducible(const IntegerPoly& p) {
  const IntegerPoly f = primitive_part(p);
  if (f.degree() < 1) throw DomainError("irreducibility test requires degree >= 1");
  if (f.degree() > 1 && gcd(f, derivative(f)).degree() >= 1) return full_factorization_certificate(f);
  if (auto cert = degree_pattern_sieve(f)) return *cert;
  return full_factorization_certificate(f);
}

}  // namespace ahm
