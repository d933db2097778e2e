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

#include "modp_poly.hpp"

#include <algorithm>
#include <tuple>

#include "ahm/errors.hpp"

namespace ahm::modp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 next_prime(u64 n) {
  while (!is_prime(n)) ++n;
  return n;
}

u64 mul(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 inv(u64 a, u64 p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw DivisionByZero("no inverse modulo p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntegerPoly& f, u64 p) {
  Poly out;
  out.reserve(f.coeffs().size());
  mpz_class r;
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] = (out[i + k] + a[i] * b[k]) % p;
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, u64 s, u64 p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], s, p);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero modulo p");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const u64 li = inv(b.back(), p);
  const int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    u64 t = mul(r[static_cast<std::size_t>(i)], li, p);
    if (t == 0) continue;
    const int s = i - db;
    q[static_cast<std::size_t>(s)] = t;
    for (int k = 0; k <= db; ++k) {
      u64& x = r[static_cast<std::size_t>(s + k)];
      x = (x + p - mul(t, b[static_cast<std::size_t>(k)], p)) % p;
    }
  }
  trim(q);
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  return {std::move(q), std::move(r)};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() < 2) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p, p);
  trim(out);
  return out;
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

Bezout bezout(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("bezout: inputs are not coprime modulo p");
  const u64 li = inv(r0[0], p);
  return {scale(s0, li, p), scale(t0, li, p)};
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return deg(gcd(f, d, p)) == 0;
}

std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f, u64 p) {
  std::vector<std::pair<int, Poly>> out;
  const Poly x{0, 1};
  Poly rest = f;
  Poly h = rem(x, rest, p);
  const mpz_class pe(static_cast<unsigned long>(p));
  int i = 0;
  while (deg(rest) >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, pe, rest, p);
    Poly g = gcd(sub(h, x, p), rest, p);
    if (deg(g) > 0) {
      out.emplace_back(i, g);
      rest = divrem(rest, g, p).first;
      h = rem(h, rest, p);
    }
  }
  if (deg(rest) > 0) out.emplace_back(deg(rest), rest);
  return out;
}

std::vector<int> factor_degrees(const Poly& f, u64 p) {
  std::vector<int> out;
  for (const auto& [d, g] : distinct_degree(f, p))
    for (int c = 0; c < deg(g) / d; ++c) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng) {
  const int n = deg(f);
  if (n == d) return {f};
  std::uniform_int_distribution<u64> coef(0, p - 1);
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly g = gcd(a, f, p);
    if (deg(g) <= 0) {
      Poly b = powmod(a, e, f, p);
      g = gcd(sub(b, Poly{1}, p), f, p);
    }
    if (deg(g) > 0 && deg(g) < n) {
      std::vector<Poly> left = equal_degree(g, d, p, rng);
      std::vector<Poly> right = equal_degree(divrem(f, g, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree_monic(const Poly& f, u64 p) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<Poly> out;
  for (const auto& [d, g] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, d, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace ahm::modp
