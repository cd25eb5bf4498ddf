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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsswm/rational.hpp"

namespace bsswm {

/// Variable layout of a polynomial ring Z[X1..Xn, A1..Am]. Variable slot i
/// (0-based) is X_{i+1} for i < n and A_{i-n+1} otherwise.
struct Arity {
  std::size_t inputs = 0;
  std::size_t params = 0;

  std::size_t total() const { return inputs + params; }
  friend bool operator==(const Arity&, const Arity&) = default;
};

/// Exponent vector with its cached total degree.
struct Monomial {
  std::vector<unsigned> exponents;
  unsigned long degree = 0;

  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

/// Graded lexicographic order with X1 < ... < Xn < A1 < ... < Am: total
/// degree first, then the exponent of the highest-ranked variable that differs.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so the zero polynomial
/// has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(Arity arity) : arity_(arity) {}
  /// Drops zero coefficients; throws UsageError on exponent-length mismatch.
  Polynomial(Arity arity, TermMap terms);

  static Polynomial constant(Arity arity, const Integer& c);
  /// Variable slot `slot` (0-based over n+m).
  static Polynomial variable(Arity arity, std::size_t slot);
  static Polynomial input(Arity arity, std::size_t i) { return variable(arity, i); }
  static Polynomial parameter(Arity arity, std::size_t k) { return variable(arity, arity.inputs + k); }

  Arity arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term (0 if absent).
  Integer constant_term() const;

  unsigned long total_degree() const;
  unsigned degree_in(std::size_t slot) const;
  /// Coefficient of the graded-lex largest monomial; 0 for the zero polynomial.
  Integer leading_coefficient() const;
  /// gcd of all coefficients, non-negative.
  Integer content() const;
  /// Largest absolute coefficient (0 for the zero polynomial).
  Integer max_abs_coefficient() const;
  bool involves(std::size_t slot) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Integer& c) const;
  /// Divides every coefficient by c, which must divide all of them.
  Polynomial divided_exactly(const Integer& c) const;
  /// Multiplies by slot^power.
  Polynomial shifted(std::size_t slot, unsigned power) const;
  /// Cyclically renames X_i to X_{((i-1+amount) mod n)+1}; parameters are untouched.
  Polynomial rotate_inputs(std::size_t amount) const;

  /// point holds n+m values, inputs first.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Terms in ascending graded-lex order, e.g. `X1^2 - 3*X1*A1 + X2^2`.
  std::string str() const;
  static Polynomial parse(std::string_view text, Arity arity);

 private:
  void add_term(const Monomial& m, const Integer& c);

  Arity arity_;
  TermMap terms_;
};

/// Ring operation selector used by the core-algebra interface.
enum class RingOp { Add, Sub, Mul };

/// Throws UsageError when the arities differ.
Polynomial poly_op(const Polynomial& a, const Polynomial& b, RingOp op);

/// Quotient a / b; throws UsageError when b does not divide a exactly.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor in Z[X, A], normalised to a positive graded-lex
/// leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to variable slot `slot`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t slot);

/// Coefficients of a viewed as a univariate polynomial in `slot`.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& a, std::size_t slot);

struct PolyStats {
  unsigned long degree = 0;
  std::size_t terms = 0;
  Integer max_abs_coefficient = 0;
};

PolyStats poly_stats(const Polynomial& g);

struct EffectiveVars {
  /// 1-based input-variable indexes.
  std::set<std::size_t> vars;
  /// Largest number of input variables occurring in a single monomial.
  std::size_t per_monomial = 0;
};

/// Parameter symbols are treated as algebraically independent: they never
/// contribute to the set, and monomials are never merged by substitution.
EffectiveVars effective_vars(const Polynomial& g);

}  // namespace bsswm
