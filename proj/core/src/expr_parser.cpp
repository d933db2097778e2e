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

// Recursive-descent parser for rational functions in j and chi.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ('+' | '-')? integer | '(' ('+' | '-')? integer ')'
//   primary := number | 'j' | 'chi' | '(' expr ')'

#include <cctype>
#include <limits>

#include "ahm/ahm_eval.hpp"
#include "ahm/errors.hpp"

namespace ahm {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RationalFunction2 parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    RationalFunction2 f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction2 expr() {
    RationalFunction2 acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction2 term() {
    RationalFunction2 acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction2 rhs = unary();
        if (rhs.numerator().is_zero()) throw ParseError("division by zero", at);
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  RationalFunction2 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction2 power() {
    RationalFunction2 base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const long e = exponent();
    if (e < 0 && base.numerator().is_zero()) throw ParseError("negative power of zero", at);
    if (e > 64 || e < -64) throw ParseError("exponent out of range", at);
    return base.pow(static_cast<int>(e));
  }

  long exponent() {
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent out of range");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -e : e;
  }

  RationalFunction2 primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction2 inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "j") return RationalFunction2::j();
      if (name == "chi") return RationalFunction2::chi();
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "' (expected j or chi)");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  RationalFunction2 number() {
    const std::size_t start = pos_;
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) ++frac_digits;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    mpq_class q(num, den);
    q.canonicalize();
    return RationalFunction2(BivariatePoly::constant(q));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction2 parse_rational_function(std::string_view text, std::optional<int> degree_bound) {
  RationalFunction2 f = Parser(text).parse();
  if (degree_bound) {
    return RationalFunction2(f.numerator(), f.denominator(), degree_bound);
  }
  return f;
}

}  // namespace ahm
