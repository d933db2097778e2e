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

#include "ahm/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ahm/errors.hpp"

namespace ahm {

BivariatePoly BivariatePoly::constant(const mpq_class& c) { return monomial(c, {0, 0}); }
BivariatePoly BivariatePoly::x() { return monomial(1, {1, 0}); }
BivariatePoly BivariatePoly::y() { return monomial(1, {0, 1}); }

BivariatePoly BivariatePoly::monomial(const mpq_class& c, Monomial m) {
  BivariatePoly p;
  p.add_term(m, c);
  return p;
}

bool BivariatePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int BivariatePoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.total();
}

int BivariatePoly::degree_x() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg);
  return d;
}

int BivariatePoly::degree_y() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y_deg);
  return d;
}

mpq_class BivariatePoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

const BivariatePoly::Terms::value_type& BivariatePoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void BivariatePoly::add_term(Monomial m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.x_deg + mb.x_deg, ma.y_deg + mb.y_deg}, ca * cb);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned n) const {
  BivariatePoly result = constant(1);
  BivariatePoly base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    auto append = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    append("j", m.x_deg);
    append("chi", m.y_deg);
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd and exact division work in Q[X][Y]: a dense vector, indexed by the
// degree in Y, of dense univariate polynomials in X.

namespace {

using UPoly = std::vector<mpq_class>;  // ascending powers of X

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q b + r over Q.
std::pair<UPoly, UPoly> udivrem(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  UPoly q;
  if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    mpq_class t = a.back() / b.back();
    q[static_cast<std::size_t>(shift)] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= t * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly p) {
  if (p.empty()) return p;
  mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

using YPoly = std::vector<UPoly>;  // index = degree in Y

void trim(YPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly to_ypoly(const BivariatePoly& p) {
  YPoly r(static_cast<std::size_t>(std::max(p.degree_y() + 1, 0)));
  for (const auto& [m, c] : p.terms()) {
    UPoly& u = r[static_cast<std::size_t>(m.y_deg)];
    if (u.size() <= static_cast<std::size_t>(m.x_deg)) u.resize(static_cast<std::size_t>(m.x_deg) + 1);
    u[static_cast<std::size_t>(m.x_deg)] = c;
  }
  for (auto& u : r) trim(u);
  trim(r);
  return r;
}

BivariatePoly from_ypoly(const YPoly& p) {
  BivariatePoly r;
  for (std::size_t yd = 0; yd < p.size(); ++yd) {
    for (std::size_t xd = 0; xd < p[yd].size(); ++xd) {
      r += BivariatePoly::monomial(p[yd][xd], {static_cast<int>(xd), static_cast<int>(yd)});
    }
  }
  return r;
}

UPoly content(const YPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (!c.empty()) g = ugcd(g, c);
  }
  return g;
}

YPoly primitive(const YPoly& p) {
  UPoly c = content(p);
  YPoly r = p;
  for (auto& u : r) {
    if (!u.empty()) u = udivrem(u, c).first;
  }
  return r;
}

// lc(b) * a - lc(a) * Y^{da-db} * b, repeated until deg_Y a < deg_Y b.
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && ydeg(a) >= ydeg(b)) {
    const std::size_t shift = static_cast<std::size_t>(ydeg(a) - ydeg(b));
    UPoly la = a.back();
    for (auto& u : a) u = umul(u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = usub(a[i + shift], umul(la, b[i]));
    trim(a);
  }
  return a;
}

BivariatePoly normalized(BivariatePoly p) {
  if (p.is_zero()) return p;
  mpq_class lc = p.leading().second;
  return p * mpq_class(1 / lc);
}

}  // namespace

BivariatePoly divide_exact(const BivariatePoly& a, const BivariatePoly& b) {
  if (b.is_zero()) throw NotDivisible("divide_exact: division by the zero polynomial");
  YPoly r = to_ypoly(a);
  const YPoly d = to_ypoly(b);
  YPoly q;
  while (!r.empty()) {
    if (ydeg(r) < ydeg(d)) throw NotDivisible("divide_exact: remainder is nonzero");
    auto [t, rem] = udivrem(r.back(), d.back());
    if (!rem.empty()) throw NotDivisible("divide_exact: remainder is nonzero");
    const std::size_t shift = static_cast<std::size_t>(ydeg(r) - ydeg(d));
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] = t;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] = usub(r[i + shift], umul(t, d[i]));
    trim(r);
  }
  return from_ypoly(q);
}

BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  YPoly pa = to_ypoly(a);
  YPoly pb = to_ypoly(b);
  UPoly c = ugcd(content(pa), content(pb));
  YPoly u = primitive(pa);
  YPoly v = primitive(pb);
  if (ydeg(u) < ydeg(v)) std::swap(u, v);
  while (!v.empty()) {
    YPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.empty() ? YPoly{} : primitive(r);
  }
  for (auto& coeff : u) coeff = umul(coeff, c);
  return normalized(from_ypoly(u));
}

}  // namespace ahm
