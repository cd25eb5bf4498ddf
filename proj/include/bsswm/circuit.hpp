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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsswm/rational.hpp"

namespace bsswm {

enum class ArithOp { Add, Sub, Mul, Div };

namespace gate {

/// Reads x_{index}, 1-based.
struct Input {
  std::size_t index = 1;
  friend bool operator==(const Input&, const Input&) = default;
};
/// Operands are 0-based gate positions strictly below the gate itself.
struct Arith {
  ArithOp op = ArithOp::Add;
  std::size_t left = 0;
  std::size_t right = 0;
  friend bool operator==(const Arith&, const Arith&) = default;
};
struct Constant {
  Rational value;
  friend bool operator==(const Constant&, const Constant&) = default;
};
/// 1 if the operand is >= 0, else 0.
struct Sign {
  std::size_t operand = 0;
  friend bool operator==(const Sign&, const Sign&) = default;
};

}  // namespace gate

using Gate = std::variant<gate::Input, gate::Arith, gate::Constant, gate::Sign>;

/// Straight-line algebraic circuit G1..Gm. Gate operands always refer to
/// earlier gates, so the list order is a topological order.
class Circuit {
 public:
  Circuit() = default;
  /// Throws UsageError on a forward or out-of-range reference.
  explicit Circuit(std::vector<Gate> gates);

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  /// Largest input index referenced (0 when there are no input gates).
  std::size_t input_count() const { return input_count_; }
  /// True when the last gate is a Sign gate.
  bool is_decision() const;

  /// Adds a gate and returns its 0-based position.
  std::size_t add(Gate g);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Gate& g, std::size_t position) const;

  std::vector<Gate> gates_;
  std::size_t input_count_ = 0;
};

/// One gate per line, `gK = kind args`, 1-based; `#` starts a comment.
Circuit parse_circuit(std::string_view text);
std::string print_circuit(const Circuit& c);

/// Values of all gates in order. Throws UsageError when |x| differs from
/// input_count(), and ComputationError(ConcreteDivisionByZero) at a div gate
/// with a zero divisor.
std::vector<Rational> eval_circuit(const Circuit& c, std::span<const Rational> x);

/// Final bit of a decision circuit. Throws UsageError for non-decision circuits.
bool decide_cdp(const Circuit& c, std::span<const Rational> x);

struct CircuitStats {
  std::size_t size = 0;
  std::size_t depth = 0;
};

/// Depth is the longest path in edges from any source gate (input or constant).
CircuitStats circuit_stats(const Circuit& c);

}  // namespace bsswm
