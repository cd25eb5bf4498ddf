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

#include "bsswm/fraction.hpp"

#include <cctype>
#include <utility>

#include "bsswm/errors.hpp"

namespace bsswm {

Fraction::Fraction(Arity arity) : num_(arity), den_(Polynomial::constant(arity, 1)) {}

Fraction::Fraction(Polynomial poly) : Fraction(poly, Polynomial::constant(poly.arity(), 1)) {}

Fraction::Fraction(Polynomial num, Polynomial den) {
  if (num.arity() != den.arity()) throw UsageError("fraction arity mismatch");
  if (den.is_zero()) throw ComputationError(RuntimeErrorKind::SymbolicDivisionByZero);
  if (num.is_zero()) {
    num_ = Polynomial(num.arity());
    den_ = Polynomial::constant(num.arity(), 1);
    return;
  }
  if (!num.is_constant() && !den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  Integer content;
  mpz_gcd(content.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (den.leading_coefficient() < 0) content = -content;
  if (content != 1) {
    num = num.divided_exactly(content);
    den = den.divided_exactly(content);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Fraction Fraction::constant(Arity arity, const Rational& value) {
  return Fraction(Polynomial::constant(arity, value.numerator()), Polynomial::constant(arity, value.denominator()),
                  Canonical{});
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_, Canonical{}); }

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction(a.num_ - b.num_, a.den_);
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) { return Fraction(a.num_ * b.num_, a.den_ * b.den_); }

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw ComputationError(RuntimeErrorKind::SymbolicDivisionByZero);
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

Fraction frac_op(const Fraction& a, const Fraction& b, FieldOp op) {
  if (a.arity() != b.arity()) throw UsageError("fraction arity mismatch");
  switch (op) {
    case FieldOp::Add:
      return a + b;
    case FieldOp::Sub:
      return a - b;
    case FieldOp::Mul:
      return a * b;
    case FieldOp::Div:
      return a / b;
  }
  throw UsageError("unknown field operation");
}

Rational Fraction::evaluate(std::span<const Rational> inputs, std::span<const Rational> params) const {
  const Arity ar = arity();
  if (inputs.size() != ar.inputs || params.size() != ar.params)
    throw UsageError("evaluation point does not match fraction arity");
  std::vector<Rational> point(inputs.begin(), inputs.end());
  point.insert(point.end(), params.begin(), params.end());
  Rational d = den_.evaluate(point);
  if (d.is_zero()) throw ComputationError(RuntimeErrorKind::ConcreteDivisionByZero, "denominator vanishes");
  return num_.evaluate(point) / d;
}

Fraction Fraction::rotate_inputs(std::size_t amount) const {
  // renaming can change which monomial leads, so the sign is re-normalised
  return Fraction(num_.rotate_inputs(amount), den_.rotate_inputs(amount));
}

std::string Fraction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

Fraction Fraction::parse(std::string_view text, Arity arity) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty() || text.front() != '(') return Fraction(Polynomial::parse(text, arity));
  auto close = text.find(')');
  auto open2 = text.find('(', close);
  if (close == std::string_view::npos || open2 == std::string_view::npos || text.back() != ')')
    throw ParseError("malformed fraction '" + std::string(text) + "'");
  std::string_view between = text.substr(close + 1, open2 - close - 1);
  std::size_t slashes = 0;
  for (char c : between) {
    if (c == '/') {
      ++slashes;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
  }
  if (slashes != 1) throw ParseError("malformed fraction '" + std::string(text) + "'");
  Polynomial num = Polynomial::parse(text.substr(1, close - 1), arity);
  Polynomial den = Polynomial::parse(text.substr(open2 + 1, text.size() - open2 - 2), arity);
  return Fraction(std::move(num), std::move(den));
}

}  // namespace bsswm
