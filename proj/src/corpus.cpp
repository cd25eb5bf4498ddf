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

#include "bsswm/corpus.hpp"

#include <string>

namespace bsswm::corpus {

namespace {

// Appends instructions whose successor is the next appended node.
class Builder {
 public:
  std::size_t next_index() const { return m_.nodes.size() + 1; }

  template <typename Node>
  void chain(Node n) {
    n.next = next_index();
    m_.nodes.emplace_back(std::move(n));
  }
  void raw(Instruction ins) { m_.nodes.push_back(std::move(ins)); }
  std::size_t size() const { return m_.nodes.size(); }
  Machine finish(std::string name, std::optional<std::size_t> n_hint) {
    m_.name = std::move(name);
    m_.n_hint = n_hint;
    validate_machine(m_);
    return std::move(m_);
  }

 private:
  Machine m_;
};

}  // namespace

Machine summation(std::size_t n, SumTail tail) {
  if (n == 0) throw UsageError("summation needs at least one input");
  Builder b;
  b.chain(node::Start{});
  b.chain(node::Input{});
  for (std::size_t i = 1; i < n; ++i) {
    b.chain(node::Shift{ShiftDir::Right});
    b.chain(node::Input{});
    b.chain(node::Shift{ShiftDir::Left});
    b.chain(node::Compute{ComputeOp::Add});
  }
  std::string name = "sum" + std::to_string(n);
  switch (tail) {
    case SumTail::Output:
      b.chain(node::Output{});
      b.raw(node::Halt{HaltKind::Plain});
      return b.finish(name + "_out", n);
    case SumTail::AcceptNonNegative: {
      b.chain(node::Shift{ShiftDir::Right});
      b.chain(node::Constant{Rational(0)});
      b.chain(node::Shift{ShiftDir::Left});
      std::size_t branch = b.size();
      b.raw(node::Branch{branch + 2, branch + 1});
      b.raw(node::Halt{HaltKind::Reject});
      b.raw(node::Halt{HaltKind::Accept});
      return b.finish(name + "_ge0", n);
    }
    case SumTail::AcceptZero: {
      // s >= 0, then -s >= 0
      b.chain(node::Shift{ShiftDir::Right});
      b.chain(node::Constant{Rational(0)});
      b.chain(node::Shift{ShiftDir::Left});
      std::size_t first = b.size();
      b.raw(node::Branch{first + 2, first + 1});
      b.raw(node::Halt{HaltKind::Reject});
      b.chain(node::Shift{ShiftDir::Right});
      b.chain(node::Constant{Rational(-1)});
      b.chain(node::Shift{ShiftDir::Left});
      b.chain(node::Compute{ComputeOp::Mul});
      b.chain(node::Shift{ShiftDir::Right});
      b.chain(node::Constant{Rational(0)});
      b.chain(node::Shift{ShiftDir::Left});
      std::size_t second = b.size();
      b.raw(node::Branch{second + 1, first + 1});
      b.raw(node::Halt{HaltKind::Accept});
      return b.finish(name + "_eq0", n);
    }
  }
  throw UsageError("unknown summation tail");
}

Machine repeated_squaring(std::size_t k) {
  Builder b;
  b.chain(node::Start{});
  b.chain(node::Input{});
  for (std::size_t i = 0; i < k; ++i) {
    b.chain(node::Copy{});
    b.chain(node::Compute{ComputeOp::Mul});
  }
  b.raw(node::Halt{HaltKind::Plain});
  return b.finish("square" + std::to_string(k), 1);
}

}  // namespace bsswm::corpus
