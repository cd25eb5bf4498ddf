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

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "bsswm/polynomial.hpp"
#include "bsswm/rational.hpp"

namespace bsswm {

/// Rational fraction g/h in Z(X1..Xn, A1..Am), kept in canonical form:
///  - the integer content of (g, h) taken jointly is 1,
///  - g and h share no non-constant polynomial factor,
///  - the graded-lex leading coefficient of h is positive.
/// The zero fraction is 0/1. Two equal field elements have equal
/// representations, so operator== is semantic equality.
class Fraction {
 public:
  Fraction() : Fraction(Arity{}) {}
  /// The zero fraction.
  explicit Fraction(Arity arity);
  /// Normalises num/den. Throws ComputationError(SymbolicDivisionByZero)
  /// when den is the zero polynomial.
  Fraction(Polynomial num, Polynomial den);

  explicit Fraction(Polynomial poly);
  static Fraction constant(Arity arity, const Rational& value);
  static Fraction input(Arity arity, std::size_t i) { return Fraction(Polynomial::input(arity, i)); }
  static Fraction parameter(Arity arity, std::size_t k) { return Fraction(Polynomial::parameter(arity, k)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  Arity arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  /// Throws ComputationError(SymbolicDivisionByZero) when b is the zero fraction.
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  /// Exact value at (x, A). Throws ComputationError(ConcreteDivisionByZero)
  /// when the denominator vanishes there.
  Rational evaluate(std::span<const Rational> inputs, std::span<const Rational> params) const;

  Fraction rotate_inputs(std::size_t amount) const;

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// `(g)/(h)`.
  std::string str() const;
  /// Accepts `(g)/(h)` or a bare polynomial `g` (read as g/1).
  static Fraction parse(std::string_view text, Arity arity);

 private:
  struct Canonical {};
  Fraction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

enum class FieldOp { Add, Sub, Mul, Div };

Fraction frac_op(const Fraction& a, const Fraction& b, FieldOp op);

}  // namespace bsswm
