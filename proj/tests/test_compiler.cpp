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
#include "bsswm/compiler.hpp"
#include "bsswm/corpus.hpp"
#include "support.hpp"

using namespace bsswm;
using testing::corpus_machine;
using testing::Rng;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

// Random inputs accepted by fits_bounds.
std::vector<std::vector<Rational>> in_bounds(const Machine& m, const CompileBounds& b, Rng& rng, std::size_t count) {
  std::vector<std::vector<Rational>> xs;
  while (xs.size() < count) {
    auto x = rng.vec(b.n);
    if (fits_bounds(m, x, b)) xs.push_back(std::move(x));
  }
  return xs;
}

// Replaces the subtraction feeding the final sign gate with an addition.
Circuit mutate(const Circuit& c) {
  std::vector<Gate> gates = c.gates();
  std::size_t target = std::get<gate::Sign>(gates.back()).operand;
  auto& g = std::get<gate::Arith>(gates[target]);
  g.op = g.op == ArithOp::Sub ? ArithOp::Add : ArithOp::Sub;
  return Circuit(std::move(gates));
}

struct Case {
  Machine machine;
  CompileBounds bounds;
};

std::vector<Case> decision_cases() {
  return {
      {corpus_machine("sumge0"), {2, 16, 4}},
      {corpus_machine("between"), {2, 14, 3}},
      {corpus_machine("ratio"), {2, 14, 3}},
      {corpus_machine("diffsq"), {2, 16, 4}},
      {corpus::summation(3, corpus::SumTail::AcceptNonNegative), {3, 24, 3}},
      {corpus::summation(3, corpus::SumTail::AcceptZero), {3, 30, 3}},
  };
}

}  // namespace

TEST_CASE("compile_machine examples") {
  Machine m = corpus_machine("sumge0");
  CompileBounds b{2, 16, 4};
  Circuit c = compile_machine(m, b);
  CHECK(c.is_decision());
  CHECK(c.input_count() == 2);
  CHECK(decide_cdp(c, std::vector<Rational>{q(1, 2), q(-1, 3)}));
  CHECK_FALSE(decide_cdp(c, std::vector<Rational>{-1, -1}));

  Machine yes = parse_machine("machine yes\nnodes:\n  0: start -> 1\n  1: halt accept\n");
  Circuit cy = compile_machine(yes, {3, 4, 1});
  CHECK(cy.input_count() == 3);
  Rng rng(51);
  for (int i = 0; i < 10; ++i) CHECK(decide_cdp(cy, rng.vec(3)));
}

TEST_CASE("compile preconditions") {
  CHECK_THROWS_AS(compile_machine(corpus_machine("const5"), {1, 4, 1}), UsageError);
  CHECK_THROWS_AS(compile_machine(corpus_machine("sumge0"), {0, 4, 1}), UsageError);
  CHECK_THROWS_AS(compile_machine(corpus_machine("sumge0"), {2, 0, 1}), UsageError);
  CHECK_THROWS_AS(compile_machine(corpus_machine("sumge0"), {2, 4, 0}), UsageError);
}

TEST_CASE("verify_compilation examples") {
  Machine m = corpus_machine("sumge0");
  CompileBounds b{2, 16, 4};
  Circuit c = compile_machine(m, b);
  Rng rng(52);
  auto xs = in_bounds(m, b, rng, 25);
  auto rep = verify_compilation(m, c, xs);
  CHECK(rep.ok());
  CHECK(rep.matched == 25);
  CHECK(verify_compilation(m, c, {}).ok());
  auto bad = verify_compilation(m, mutate(c), xs);
  CHECK_FALSE(bad.ok());
  CHECK(bad.mismatches.size() >= 1);
}

TEST_CASE("oracle equivalence over decision machines") {
  Rng rng(53);
  for (const auto& [m, b] : decision_cases()) {
    CAPTURE(m.name);
    Circuit c = compile_machine(m, b);
    auto xs = in_bounds(m, b, rng, 40);
    // zero sums and ties exercise the >= boundary
    std::vector<Rational> tie(b.n, 0);
    if (fits_bounds(m, tie, b)) xs.push_back(tie);
    std::vector<Rational> balanced(b.n, q(1, 3));
    balanced.back() = q(-1, 3) * Rational(static_cast<long>(b.n) - 1);
    if (fits_bounds(m, balanced, b)) xs.push_back(balanced);
    auto rep = verify_compilation(m, c, xs);
    CHECK(rep.ok());
    CHECK(rep.matched == xs.size());
    std::size_t accepted = 0;
    for (const auto& x : xs) accepted += run(m, x).status == RunStatus::Accepted ? 1 : 0;
    CHECK(accepted > 0);
    CHECK(accepted < xs.size());
    CHECK(c.size() <= compiled_size_bound(m, b));
  }
}

TEST_CASE("size bound across bounds") {
  for (const auto& [m, b0] : decision_cases()) {
    for (std::size_t t : {1, 5, 20, 40})
      for (std::size_t w : {1, 2, 6}) {
        CompileBounds b{b0.n, t, w};
        CHECK(compile_machine(m, b).size() <= compiled_size_bound(m, b));
      }
  }
  Machine spin = parse_machine("machine spin\nnodes:\n  0: start -> 0\n");
  CompileBounds b{7, 9, 1};
  CHECK(compile_machine(spin, b).size() <= compiled_size_bound(spin, b));
}

TEST_CASE("larger bounds keep decisions") {
  Rng rng(54);
  for (const auto& [m, b] : decision_cases()) {
    CAPTURE(m.name);
    Circuit small = compile_machine(m, b);
    Circuit longer = compile_machine(m, {b.n, b.steps + 7, b.half_width});
    Circuit wider = compile_machine(m, {b.n, b.steps, b.half_width + 2});
    for (const auto& x : in_bounds(m, b, rng, 15)) {
      bool d = decide_cdp(small, x);
      CHECK(decide_cdp(longer, x) == d);
      CHECK(decide_cdp(wider, x) == d);
    }
  }
}

TEST_CASE("fits_bounds") {
  Machine m = corpus_machine("sumge0");
  CHECK(fits_bounds(m, std::vector<Rational>{1, 2}, {2, 10, 1}));
  CHECK_FALSE(fits_bounds(m, std::vector<Rational>{1, 2}, {2, 9, 1}));
  CHECK_FALSE(fits_bounds(m, std::vector<Rational>{1}, {1, 20, 2}));
  CHECK_FALSE(fits_bounds(corpus_machine("loop_right"), {}, {1, 20, 50}));
  CHECK_FALSE(fits_bounds(corpus_machine("ratio"), std::vector<Rational>{1, 0}, {2, 20, 2}));
  CHECK_FALSE(fits_bounds(corpus_machine("diffsq"), std::vector<Rational>{1, 2}, {2, 20, 1}));
  CHECK(fits_bounds(corpus_machine("diffsq"), std::vector<Rational>{1, 2}, {2, 20, 2}));
}

TEST_CASE("compiled text") {
  Machine m = corpus_machine("between");
  CompileBounds b{2, 12, 2};
  Circuit c = compile_machine(m, b);
  std::string text = compiled_circuit_text(m, b, c);
  CHECK(text.rfind("# compiled from machine between\n# n = 2, T = 12, W = 2\n", 0) == 0);
  CHECK(parse_circuit(text) == c);
  CHECK(compile_machine(m, b) == c);
}
