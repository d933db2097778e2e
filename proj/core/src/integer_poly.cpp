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
#include <sstream>
#include <utility>

#include "ahm/errors.hpp"
#include "ahm/polyfactor.hpp"

namespace ahm {

IntegerPoly::IntegerPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntegerPoly::IntegerPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntegerPoly IntegerPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntegerPoly(std::move(v));
}

void IntegerPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntegerPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const mpz_class& IntegerPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

IntegerPoly& IntegerPoly::operator+=(const IntegerPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

IntegerPoly& IntegerPoly::operator-=(const IntegerPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

IntegerPoly& IntegerPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

IntegerPoly operator*(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[i + k] += a.c_[i] * b.c_[k];
  }
  return IntegerPoly(std::move(out));
}

IntegerPoly IntegerPoly::operator-() const {
  IntegerPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string IntegerPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntegerPoly derivative(const IntegerPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return IntegerPoly(std::move(out));
}

IntegerPoly pow(const IntegerPoly& p, unsigned k) {
  IntegerPoly result{1};
  IntegerPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

mpz_class content(const IntegerPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntegerPoly primitive_part(const IntegerPoly& p) {
  if (p.is_zero()) return {};
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntegerPoly(std::move(out));
}

std::optional<IntegerPoly> try_divide(const IntegerPoly& a, const IntegerPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return IntegerPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    mpz_class& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = i - db;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(shift + k)] -= t * bc[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(shift)] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntegerPoly(std::move(q));
}

IntegerPoly exact_divide(const IntegerPoly& a, const IntegerPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return *std::move(q);
}

IntegerPoly pseudo_remainder(const IntegerPoly& a, const IntegerPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const mpz_class& lb = b.leading();
  int e = a.degree() - b.degree() + 1;
  IntegerPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntegerPoly s = IntegerPoly::monomial(r.leading(), r.degree() - b.degree());
    r = r * lb - s * b;
    --e;
  }
  mpz_class f;
  mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return r * f;
}

IntegerPoly gcd(const IntegerPoly& a, const IntegerPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntegerPoly A = primitive_part(a);
  IntegerPoly B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  mpz_class g = 1;
  mpz_class h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    IntegerPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return primitive_part(B);
    if (R.degree() == 0) return IntegerPoly{1};
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    mpz_class divisor = g * hd;
    std::vector<mpz_class> rc = R.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    A = std::move(B);
    B = IntegerPoly(std::move(rc));
    g = A.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      mpz_class gd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_class hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

IntegerPoly squarefree_part(const IntegerPoly& h) {
  if (h.degree() < 1) throw DomainError("squarefree_part requires degree >= 1");
  IntegerPoly g = gcd(h, derivative(h));
  return primitive_part(exact_divide(primitive_part(h), g));
}

IntegerPoly clear_denominators(const std::vector<mpq_class>& coeffs) {
  mpz_class l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(v * c.get_num());
  }
  return primitive_part(IntegerPoly(std::move(out)));
}

std::vector<mpq_class> to_monic_rational(const IntegerPoly& p) {
  std::vector<mpq_class> out;
  out.reserve(p.coeffs().size());
  const mpz_class& l = p.leading();
  for (const auto& c : p.coeffs()) {
    mpq_class q(c, l);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

PowerDecomposition perfect_power_decompose(const IntegerPoly& h) {
  if (h.degree() < 1) throw DomainError("perfect_power_decompose requires degree >= 1");
  IntegerPoly target = primitive_part(h);
  IntegerPoly base = squarefree_part(target);
  if (target.degree() % base.degree() != 0)
    throw NotAPerfectPower("degree " + std::to_string(target.degree()) + " is not a multiple of squarefree degree " +
                           std::to_string(base.degree()));
  const int k = target.degree() / base.degree();
  if (pow(base, static_cast<unsigned>(k)) != target)
    throw NotAPerfectPower("(" + target.to_string() + ") is not a power of its squarefree part (" +
                           base.to_string() + ")");
  return {std::move(base), k};
}

}  // namespace ahm
