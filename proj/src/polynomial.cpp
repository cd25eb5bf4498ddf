// Copyright 2026 The bsswm Authors
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

#include "bsswm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <utility>

#include "bsswm/errors.hpp"

namespace bsswm {

Monomial::Monomial(std::vector<unsigned> exps) : exponents(std::move(exps)) {
  degree = std::accumulate(exponents.begin(), exponents.end(), 0ul);
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
  }
  return false;
}

Polynomial::Polynomial(Arity arity, TermMap terms) : arity_(arity) {
  for (auto& [m, c] : terms) {
    if (m.exponents.size() != arity.total()) throw UsageError("monomial length does not match arity");
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(Arity arity, const Integer& c) {
  Polynomial p(arity);
  if (c != 0) p.terms_.emplace(Monomial(std::vector<unsigned>(arity.total(), 0)), c);
  return p;
}

Polynomial Polynomial::variable(Arity arity, std::size_t slot) {
  if (slot >= arity.total()) throw UsageError("variable slot out of range");
  std::vector<unsigned> e(arity.total(), 0);
  e[slot] = 1;
  Polynomial p(arity);
  p.terms_.emplace(Monomial(std::move(e)), 1);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree == 0); }

Integer Polynomial::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.degree != 0) return 0;
  return terms_.begin()->second;
}

unsigned long Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree; }

unsigned Polynomial::degree_in(std::size_t slot) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponents[slot]);
  return d;
}

Integer Polynomial::leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer Polynomial::max_abs_coefficient() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) {
    Integer a = abs(c);
    if (a > s) s = a;
  }
  return s;
}

bool Polynomial::involves(std::size_t slot) const {
  return std::any_of(terms_.begin(), terms_.end(), [slot](const auto& t) { return t.first.exponents[slot] > 0; });
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) throw UsageError("polynomial arity mismatch");
  Polynomial r(a.arity_);
  std::vector<unsigned> e(a.arity_.total());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma.exponents[i] + mb.exponents[i];
      r.add_term(Monomial(e), ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  if (c == 0) return Polynomial(arity_);
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::divided_exactly(const Integer& c) const {
  if (c == 0) throw UsageError("division of polynomial by integer zero");
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) throw UsageError("inexact integer division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Polynomial Polynomial::shifted(std::size_t slot, unsigned power) const {
  if (power == 0) return *this;
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    auto e = m.exponents;
    e[slot] += power;
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::rotate_inputs(std::size_t amount) const {
  const std::size_t n = arity_.inputs;
  if (n == 0) return *this;
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e = m.exponents;
    for (std::size_t i = 0; i < n; ++i) e[(i + amount) % n] = m.exponents[i];
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_.total()) throw UsageError("evaluation point has wrong length");
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational term{c};
    for (std::size_t i = 0; i < m.exponents.size() && !term.is_zero(); ++i) {
      if (m.exponents[i] == 1) {
        term *= point[i];
      } else if (m.exponents[i] > 1) {
        term *= point[i].pow(m.exponents[i]);
      }
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string variable_name(Arity arity, std::size_t slot) {
  if (slot < arity.inputs) return "X" + std::to_string(slot + 1);
  return "A" + std::to_string(slot - arity.inputs + 1);
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer a = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += variable_name(arity_, i);
      if (m.exponents[i] > 1) factors += '^' + std::to_string(m.exponents[i]);
    }
    if (factors.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += factors;
    } else {
      out += a.get_str() + '*' + factors;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Arity arity) : text_(text), arity_(arity) {}

  Polynomial parse() {
    Polynomial result(arity_);
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_space();
    }
    while (true) {
      Polynomial t = term();
      result += negative ? -t : t;
      skip_space();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip_space();
    }
    return result;
  }

 private:
  Polynomial term() {
    Integer coeff = 1;
    std::vector<unsigned> e(arity_.total(), 0);
    while (true) {
      skip_space();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(digits(), 10);
      } else if (c == 'X' || c == 'A') {
        get();
        std::size_t index = std::stoul(digits());
        std::size_t limit = c == 'X' ? arity_.inputs : arity_.params;
        if (index == 0 || index > limit) fail(std::string("variable ") + c + std::to_string(index) + " outside arity");
        std::size_t slot = (c == 'X' ? 0 : arity_.inputs) + index - 1;
        unsigned power = 1;
        skip_space();
        if (peek() == '^') {
          get();
          skip_space();
          power = static_cast<unsigned>(std::stoul(digits()));
        }
        e[slot] += power;
      } else {
        fail("expected coefficient or variable");
      }
      skip_space();
      if (peek() != '*') break;
      get();
    }
    Polynomial::TermMap m;
    m.emplace(Monomial(std::move(e)), coeff);
    return Polynomial(arity_, std::move(m));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in polynomial '" + std::string(text_) + "'", 1, pos_ + 1);
  }

  std::string_view text_;
  Arity arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, Arity arity) { return PolyParser(text, arity).parse(); }

Polynomial poly_op(const Polynomial& a, const Polynomial& b, RingOp op) {
  switch (op) {
    case RingOp::Add:
      return a + b;
    case RingOp::Sub:
      return a - b;
    case RingOp::Mul:
      return a * b;
  }
  throw UsageError("unknown ring operation");
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw UsageError("polynomial arity mismatch");
  if (b.is_zero()) throw UsageError("exact division by the zero polynomial");
  const auto& [lead_b, lc_b] = *b.terms().rbegin();
  Polynomial quotient(a.arity());
  Polynomial rest = a;
  std::vector<unsigned> e(a.arity().total());
  while (!rest.is_zero()) {
    const auto& [lead_r, lc_r] = *rest.terms().rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lead_r.exponents[i] < lead_b.exponents[i]) throw UsageError("polynomial division is not exact");
      e[i] = lead_r.exponents[i] - lead_b.exponents[i];
    }
    if (!mpz_divisible_p(lc_r.get_mpz_t(), lc_b.get_mpz_t())) throw UsageError("polynomial division is not exact");
    Integer q = lc_r / lc_b;
    Polynomial::TermMap t;
    t.emplace(Monomial(e), q);
    Polynomial term(a.arity(), std::move(t));
    rest -= term * b;
    quotient += term;
  }
  return quotient;
}

std::map<unsigned, Polynomial> coefficients_in(const Polynomial& a, std::size_t slot) {
  std::map<unsigned, Polynomial::TermMap> buckets;
  for (const auto& [m, c] : a.terms()) {
    auto e = m.exponents;
    unsigned d = e[slot];
    e[slot] = 0;
    buckets[d].emplace(Monomial(std::move(e)), c);
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, Polynomial(a.arity(), std::move(terms)));
  return out;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t slot) {
  if (b.is_zero()) throw UsageError("pseudo-remainder by the zero polynomial");
  auto cb = coefficients_in(b, slot);
  unsigned db = cb.rbegin()->first;
  const Polynomial& lc_b = cb.rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero()) {
    auto cr = coefficients_in(r, slot);
    unsigned dr = cr.rbegin()->first;
    if (dr < db) break;
    r = lc_b * r - (cr.rbegin()->second * b).shifted(slot, dr - db);
  }
  return r;
}

namespace {

Polynomial with_positive_lead(Polynomial p) { return p.leading_coefficient() < 0 ? -p : p; }

std::optional<std::size_t> highest_slot(const Polynomial& a, const Polynomial& b) {
  for (std::size_t s = a.arity().total(); s-- > 0;)
    if (a.involves(s) || b.involves(s)) return s;
  return std::nullopt;
}

// gcd of the coefficients of p viewed as a polynomial in `slot`.
Polynomial content_in(const Polynomial& p, std::size_t slot) {
  Polynomial g(p.arity());
  for (const auto& [d, c] : coefficients_in(p, slot)) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw UsageError("polynomial arity mismatch");
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  auto slot = highest_slot(a, b);
  if (!slot) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
    return Polynomial::constant(a.arity(), g);
  }
  const std::size_t v = *slot;
  // A common divisor of a polynomial free of v divides every v-coefficient of the other.
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  Polynomial cont_a = content_in(a, v);
  Polynomial cont_b = content_in(b, v);
  Polynomial cont = gcd(cont_a, cont_b);
  Polynomial p = exact_divide(a, cont_a);
  Polynomial q = exact_divide(b, cont_b);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

  // primitive polynomial remainder sequence
  while (!q.is_zero()) {
    Polynomial r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? Polynomial(a.arity()) : exact_divide(r, content_in(r, v));
  }
  if (p.degree_in(v) == 0) return cont;
  return with_positive_lead(cont * p);
}

PolyStats poly_stats(const Polynomial& g) {
  return PolyStats{g.total_degree(), g.term_count(), g.max_abs_coefficient()};
}

EffectiveVars effective_vars(const Polynomial& g) {
  EffectiveVars out;
  const std::size_t n = g.arity().inputs;
  for (const auto& [m, c] : g.terms()) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.exponents[i] > 0) {
        ++count;
        out.vars.insert(i + 1);
      }
    }
    out.per_monomial = std::max(out.per_monomial, count);
  }
  return out;
}

}  // namespace bsswm
