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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace bsswm;
using testing::Rng;

namespace {

// Independent term-map model: plain lexicographic map, schoolbook products.
using Dense = std::map<std::vector<unsigned>, Integer>;

Dense dense(const Polynomial& p) {
  Dense d;
  for (const auto& [m, c] : p.terms()) d[m.exponents] = c;
  return d;
}

void prune(Dense& d) {
  for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
}

Dense dense_add(Dense a, const Dense& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  prune(r);
  return r;
}

Rational dense_eval(const Dense& d, const std::vector<Rational>& pt) {
  Rational s = 0;
  for (const auto& [e, c] : d) {
    Rational t{c};
    for (std::size_t i = 0; i < e.size(); ++i) t *= pt[i].pow(e[i]);
    s += t;
  }
  return s;
}

const Arity A31{3, 1};
Fraction X(std::size_t i) { return Fraction::input(A31, i - 1); }
Fraction P(std::size_t k) { return Fraction::parameter(A31, k - 1); }
Fraction C(long p, long q = 1) { return Fraction::constant(A31, Rational(Integer(p), Integer(q))); }

}  // namespace

TEST_CASE("rational normal form and text") {
  CHECK(Rational(Integer(4), Integer(-6)) == Rational(Integer(-2), Integer(3)));
  CHECK(Rational(Integer(4), Integer(-6)).denominator() == 3);
  CHECK(Rational(Integer(0), Integer(-5)).denominator() == 1);
  CHECK(Rational::parse("-7/14").str() == "-1/2");
  CHECK(Rational::parse("12").str() == "12");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ComputationError);
  CHECK(parse_rational_vector("1/2, -1/3") == std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3))});
  CHECK(parse_rational_vector("").empty());
  CHECK(format_rational_vector({Rational(1), Rational(Integer(-2), Integer(4))}) == "1,-1/2");
}

TEST_CASE("rational round trip") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.rational() * rng.rational() + rng.rational();
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("poly_op examples") {
  Arity a{2, 0};
  auto x1 = Polynomial::input(a, 0), x2 = Polynomial::input(a, 1);
  CHECK(poly_op(x1 + x2, Polynomial(a), RingOp::Add) == x1 + x2);
  Polynomial sq = poly_op(x1 + x2, x1 - x2, RingOp::Mul);
  CHECK(dense(sq) == Dense{{{2, 0}, 1}, {{0, 2}, -1}});
  Polynomial z = poly_op(x1, x1, RingOp::Sub);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK_THROWS_AS(poly_op(x1, Polynomial::input(Arity{3, 0}, 0), RingOp::Add), UsageError);
}

TEST_CASE("poly ops agree with the dense model") {
  Rng rng(12);
  Arity a{3, 1};
  for (int i = 0; i < 250; ++i) {
    auto p = rng.poly(a), q = rng.poly(a);
    CHECK(dense(poly_op(p, q, RingOp::Add)) == dense_add(dense(p), dense(q), 1));
    CHECK(dense(poly_op(p, q, RingOp::Sub)) == dense_add(dense(p), dense(q), -1));
    CHECK(dense(poly_op(p, q, RingOp::Mul)) == dense_mul(dense(p), dense(q)));
    std::vector<Rational> pt = rng.vec(4);
    CHECK(p.evaluate(pt) == dense_eval(dense(p), pt));
  }
}

TEST_CASE("ring laws") {
  Rng rng(13);
  Arity a{2, 1};
  for (int i = 0; i < 200; ++i) {
    auto p = rng.poly(a), q = rng.poly(a), r = rng.poly(a);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    Polynomial mixed = p * q - r;
    for (const auto& [m, c] : mixed.terms()) CHECK(c != 0);
  }
}

TEST_CASE("exact division and gcd") {
  Rng rng(14);
  Arity a{2, 1};
  for (int i = 0; i < 120; ++i) {
    auto g = rng.nonzero_poly(a, 2, 1), p = rng.nonzero_poly(a, 2, 1), q = rng.nonzero_poly(a, 2, 1);
    CHECK(exact_divide(g * p, g) == p);
    Polynomial d = gcd(g * p, g * q);
    CHECK(exact_divide(g * p, d) * d == g * p);
    CHECK(exact_divide(g * q, d) * d == g * q);
    // g divides the gcd
    CHECK(exact_divide(d, gcd(d, g)) * gcd(d, g) == d);
    CHECK(gcd(d, g).total_degree() == g.total_degree());
  }
  Arity b{1, 0};
  CHECK_THROWS_AS(exact_divide(Polynomial::input(b, 0) + Polynomial::constant(b, 1), Polynomial::input(b, 0)), UsageError);
  CHECK(gcd(Polynomial(b), Polynomial(b)).is_zero());
}

TEST_CASE("frac_op examples") {
  Arity a{2, 0};
  auto x1 = Fraction::input(a, 0), x2 = Fraction::input(a, 1);
  CHECK(frac_op(x1, x1, FieldOp::Div) == Fraction::constant(a, 1));
  CHECK(frac_op(x1, x2, FieldOp::Add).str() == "(X1 + X2)/(1)");
  auto one = Fraction::constant(a, 1);
  Fraction s = frac_op(one / x1, one / x2, FieldOp::Add);
  CHECK(s.num() == Polynomial::input(a, 0) + Polynomial::input(a, 1));
  CHECK(s.den() == Polynomial::input(a, 0) * Polynomial::input(a, 1));
  CHECK_THROWS_AS(frac_op(x1, Fraction(a), FieldOp::Div), ComputationError);
  try {
    (void)(x1 / Fraction(a));
  } catch (const ComputationError& e) {
    CHECK(e.kind() == RuntimeErrorKind::SymbolicDivisionByZero);
  }
  CHECK_THROWS_AS(frac_op(x1, Fraction::input(Arity{3, 0}, 0), FieldOp::Add), UsageError);
}

TEST_CASE("fraction evaluate examples") {
  Arity a{2, 0};
  Fraction f = Fraction::input(a, 0) + Fraction::input(a, 1);
  std::vector<Rational> x{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3))};
  CHECK(f.evaluate(x, {}) == Rational(Integer(1), Integer(6)));
  Arity b{1, 0};
  Fraction self = Fraction::input(b, 0) / Fraction::input(b, 0);
  CHECK(self == Fraction::constant(b, 1));
  CHECK(self.evaluate(std::vector<Rational>{5}, {}) == 1);
  Fraction inv = Fraction::constant(b, 1) / Fraction::input(b, 0);
  try {
    inv.evaluate(std::vector<Rational>{0}, {});
    FAIL("expected a division error");
  } catch (const ComputationError& e) {
    CHECK(e.kind() == RuntimeErrorKind::ConcreteDivisionByZero);
  }
}

TEST_CASE("canonical form invariants") {
  Rng rng(15);
  Arity a{2, 1};
  for (int i = 0; i < 200; ++i) {
    Fraction f = rng.fraction(a);
    CHECK(f.den().leading_coefficient() > 0);
    Integer joint = gcd(f.num().content(), f.den().content());
    CHECK(joint == 1);
    if (f.is_zero()) CHECK(f.den() == Polynomial::constant(a, 1));
    // idempotent
    CHECK(Fraction(f.num(), f.den()) == f);
    CHECK(Fraction::parse(f.str(), a) == f);
    if (!f.num().is_constant() && !f.den().is_constant()) CHECK(gcd(f.num(), f.den()).is_constant());
  }
}

TEST_CASE("evaluation homomorphism") {
  Rng rng(16);
  Arity a{2, 1};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Fraction f = rng.fraction(a), g = rng.fraction(a);
    std::vector<Rational> x = rng.vec(2), p = rng.vec(1);
    std::vector<Rational> pt{x[0], x[1], p[0]};
    if (f.den().evaluate(pt).is_zero() || g.den().evaluate(pt).is_zero()) continue;
    Rational fv = f.evaluate(x, p), gv = g.evaluate(x, p);
    CHECK((f + g).evaluate(x, p) == fv + gv);
    CHECK((f - g).evaluate(x, p) == fv - gv);
    CHECK((f * g).evaluate(x, p) == fv * gv);
    if (!g.is_zero() && !gv.is_zero()) {
      Fraction q = f / g;
      if (!q.den().evaluate(pt).is_zero()) CHECK(q.evaluate(x, p) == fv / gv);
    }
    ++checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("canonical form uniqueness catalog") {
  struct Identity {
    const char* name;
    Fraction lhs, rhs;
  };
  auto x1 = X(1), x2 = X(2), x3 = X(3), a1 = P(1);
  std::vector<Identity> catalog{
      {"difference of squares", (x1 * x1 - x2 * x2) / (x1 - x2), x1 + x2},
      {"sum of reciprocals", C(1) / x1 + C(1) / x2, (x1 + x2) / (x1 * x2)},
      {"self quotient", x1 / x1, C(1)},
      {"integer content", (C(2) * x1) / (C(4) * x2), x1 / (C(2) * x2)},
      {"double negation", (-x1) / (-x2), x1 / x2},
      {"sign moves to numerator", x1 / (-x2), -(x1 / x2)},
      {"binomial square", (x1 + x2) * (x1 + x2), x1 * x1 + C(2) * x1 * x2 + x2 * x2},
      {"quotient of quotients", (x1 / x2) / (x3 / x1), (x1 * x1) / (x2 * x3)},
      {"double reciprocal", C(1) / (C(1) / x1), x1},
      {"antisymmetric ratio", (x1 - x2) / (x2 - x1), C(-1)},
      {"geometric sum", (x1 * x1 * x1 - C(1)) / (x1 - C(1)), x1 * x1 + x1 + C(1)},
      {"common factor", (x1 * x2 + x1 * x3) / (x2 + x3), x1},
      {"parameter cancels", (a1 * x1) / a1, x1},
      {"parameter difference of squares", (x1 + a1) * (x1 - a1), x1 * x1 - a1 * a1},
      {"difference of reciprocals", C(1) / x1 - C(1) / x2, (x2 - x1) / (x1 * x2)},
      {"telescoping product", (x1 / x2) * (x2 / x3), x1 / x3},
      {"perfect square ratio", (x1 * x1 + C(2) * x1 + C(1)) / ((x1 + C(1)) * (x1 + C(1))), C(1)},
      {"scaled linear forms", (C(6) * x1 + C(4) * x2) / (C(9) * x1 + C(6) * x2), C(2, 3)},
      {"cubic over quadratic", (x1 * x1 * x2 - x2 * x2 * x2) / (x1 * x2 + x2 * x2), x1 - x2},
      {"rational constants", C(1, 2) + C(1, 3), C(5, 6)},
      {"partition of unity", x1 / (x1 + x2) + x2 / (x1 + x2), C(1)},
      {"iterated division", (x1 * x1 - x2 * x2) / (x1 + x2) / (x1 - x2), C(1)},
      {"shifted numerator", (x1 + C(1)) / x2 - C(1) / x2, x1 / x2},
      {"monomial cancellation", (x1 * x2 * x3) / (x3 * x2), x1},
      {"mixed parameter ratio", (a1 * x1 - a1 * x2) / (x2 * a1 - x1 * a1), C(-1)},
  };
  CHECK(catalog.size() >= 20);
  for (const auto& id : catalog) {
    CAPTURE(id.name);
    CHECK(id.lhs == id.rhs);
    CHECK(id.lhs.str() == id.rhs.str());
  }
}

TEST_CASE("poly_stats examples") {
  Arity a{4, 0};
  auto s0 = poly_stats(Polynomial(a));
  CHECK(s0.degree == 0);
  CHECK(s0.terms == 0);
  CHECK(s0.max_abs_coefficient == 0);
  auto s1 = poly_stats(Polynomial::parse("3*X1^2*X2", Arity{2, 0}));
  CHECK(s1.degree == 3);
  CHECK(s1.terms == 1);
  CHECK(s1.max_abs_coefficient == 3);
  auto s2 = poly_stats(Polynomial::parse("X1 + X2 + X3 + X4", a));
  CHECK(s2.degree == 1);
  CHECK(s2.terms == 4);
  CHECK(s2.max_abs_coefficient == 1);
}

TEST_CASE("effective_vars examples") {
  auto e0 = effective_vars(Polynomial(Arity{2, 0}));
  CHECK(e0.vars.empty());
  CHECK(e0.per_monomial == 0);
  auto e1 = effective_vars(Polynomial::parse("3*X1^2*X2", Arity{2, 0}));
  CHECK(e1.vars == std::set<std::size_t>{1, 2});
  CHECK(e1.per_monomial == 2);
  auto e2 = effective_vars(Polynomial::parse("A1*X3", Arity{4, 1}));
  CHECK(e2.vars == std::set<std::size_t>{3});
  CHECK(e2.per_monomial == 1);
}

TEST_CASE("polynomial text") {
  Arity a{2, 1};
  Polynomial p = Polynomial::parse("X1^2 - 3*X1*A1 + X2^2 - 7", a);
  CHECK(p.evaluate(std::vector<Rational>{2, 1, 5}) == Rational(4 - 30 + 1 - 7));
  CHECK(Polynomial::parse(p.str(), a) == p);
  CHECK_THROWS_AS(Polynomial::parse("X3", a), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("X1 +", a), ParseError);
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Polynomial q = rng.poly(a, 5, 3, 1000);
    CHECK(Polynomial::parse(q.str(), a) == q);
  }
}

TEST_CASE("grlex order and leading coefficient") {
  Arity a{2, 1};
  // X1 < X2 < A1 within a degree; higher degree dominates
  CHECK(Polynomial::parse("X1 - X2", a).leading_coefficient() == -1);
  CHECK(Polynomial::parse("-A1 + X2", a).leading_coefficient() == -1);
  CHECK(Polynomial::parse("X1^2 - 5*A1", a).leading_coefficient() == 1);
  CHECK(Polynomial::parse("X2 + X1", a).str() == "X1 + X2");
  // den sign normalisation follows the leading term
  Fraction f(Polynomial::parse("1", a), Polynomial::parse("X1 - X2", a));
  CHECK(f.den().str() == "-X1 + X2");
  CHECK(f.num().str() == "-1");
}

TEST_CASE("input rotation") {
  Arity a{3, 1};
  Polynomial p = Polynomial::parse("X1*X3 + 2*X2 + A1*X3", a);
  CHECK(p.rotate_inputs(1) == Polynomial::parse("X2*X1 + 2*X3 + A1*X1", a));
  CHECK(p.rotate_inputs(3) == p);
  Rng rng(18);
  for (int i = 0; i < 100; ++i) {
    Fraction f = rng.fraction(a);
    CHECK(f.rotate_inputs(1).rotate_inputs(2) == f);
  }
}
