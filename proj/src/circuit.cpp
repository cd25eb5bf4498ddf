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

#include "bsswm/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bsswm/errors.hpp"

namespace bsswm {

Circuit::Circuit(std::vector<Gate> gates) {
  gates_.reserve(gates.size());
  for (auto& g : gates) add(std::move(g));
}

void Circuit::check(const Gate& g, std::size_t position) const {
  auto ref = [position](std::size_t operand) {
    if (operand >= position)
      throw UsageError("gate g" + std::to_string(position + 1) + " refers to g" + std::to_string(operand + 1) +
                       ", which is not an earlier gate");
  };
  if (const auto* a = std::get_if<gate::Arith>(&g)) {
    ref(a->left);
    ref(a->right);
  } else if (const auto* s = std::get_if<gate::Sign>(&g)) {
    ref(s->operand);
  } else if (const auto* in = std::get_if<gate::Input>(&g)) {
    if (in->index == 0) throw UsageError("input indexes are 1-based");
  }
}

std::size_t Circuit::add(Gate g) {
  check(g, gates_.size());
  if (const auto* in = std::get_if<gate::Input>(&g)) input_count_ = std::max(input_count_, in->index);
  gates_.push_back(std::move(g));
  return gates_.size() - 1;
}

bool Circuit::is_decision() const { return !gates_.empty() && std::holds_alternative<gate::Sign>(gates_.back()); }

namespace {

std::string_view op_name(ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return "add";
    case ArithOp::Sub:
      return "sub";
    case ArithOp::Mul:
      return "mul";
    case ArithOp::Div:
      return "div";
  }
  return "?";
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '=') {
      out.emplace_back("=", i + 1);
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=') ++i;
    out.emplace_back(std::string(line.substr(start, i - start)), start + 1);
  }
  return out;
}

std::size_t gate_ref(const std::string& w, std::size_t line, std::size_t col) {
  if (w.size() < 2 || w[0] != 'g' || !std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      w.size() > 19)
    throw ParseError("expected a gate reference gK, found '" + w + "'", line, col);
  std::size_t k = std::stoull(w.substr(1));
  if (k == 0) throw ParseError("gate indexes are 1-based", line, col);
  return k;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto w = words(raw);
    if (w.empty()) continue;
    auto at = [&](std::size_t i) -> const std::pair<std::string, std::size_t>& {
      if (i >= w.size()) throw ParseError("unexpected end of line", line_no, raw.size() + 1);
      return w[i];
    };
    std::size_t self = gate_ref(at(0).first, line_no, at(0).second);
    if (self != c.size() + 1)
      throw ParseError("expected gate g" + std::to_string(c.size() + 1) + ", found '" + at(0).first + "'", line_no,
                       at(0).second);
    if (at(1).first != "=") throw ParseError("expected '='", line_no, at(1).second);
    const auto& [kind, kind_col] = at(2);
    auto operand = [&](std::size_t i) {
      std::size_t k = gate_ref(at(i).first, line_no, at(i).second);
      if (k >= self)
        throw ParseError("forward reference to g" + std::to_string(k) + " from g" + std::to_string(self), line_no,
                         at(i).second);
      return k - 1;
    };
    std::size_t arg_count = 0;
    Gate g;
    if (kind == "input") {
      const auto& [idx, col] = at(3);
      if (idx.empty() || idx.size() > 18 || !std::all_of(idx.begin(), idx.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          std::stoull(idx) == 0)
        throw ParseError("bad input index '" + idx + "'", line_no, col);
      g = gate::Input{std::stoull(idx)};
      arg_count = 1;
    } else if (kind == "const") {
      try {
        g = gate::Constant{Rational::parse(at(3).first)};
      } catch (const ParseError&) {
        throw ParseError("malformed rational '" + at(3).first + "'", line_no, at(3).second);
      }
      arg_count = 1;
    } else if (kind == "sign") {
      g = gate::Sign{operand(3)};
      arg_count = 1;
    } else if (kind == "add" || kind == "sub" || kind == "mul" || kind == "div") {
      ArithOp op = kind == "add" ? ArithOp::Add : kind == "sub" ? ArithOp::Sub : kind == "mul" ? ArithOp::Mul : ArithOp::Div;
      g = gate::Arith{op, operand(3), operand(4)};
      arg_count = 2;
    } else {
      throw ParseError("unknown gate kind '" + kind + "'", line_no, kind_col);
    }
    if (w.size() != 3 + arg_count) throw ParseError("unexpected '" + w[3 + arg_count].first + "'", line_no, w[3 + arg_count].second);
    c.add(std::move(g));
  }
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << 'g' << i + 1 << " = ";
    std::visit(
        [&os](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, gate::Input>) {
            os << "input " << g.index;
          } else if constexpr (std::is_same_v<T, gate::Arith>) {
            os << op_name(g.op) << " g" << g.left + 1 << " g" << g.right + 1;
          } else if constexpr (std::is_same_v<T, gate::Constant>) {
            os << "const " << g.value;
          } else {
            os << "sign g" << g.operand + 1;
          }
        },
        c.gates()[i]);
    os << '\n';
  }
  return os.str();
}

std::vector<Rational> eval_circuit(const Circuit& c, std::span<const Rational> x) {
  if (x.size() != c.input_count())
    throw UsageError("circuit expects " + std::to_string(c.input_count()) + " inputs, got " + std::to_string(x.size()));
  std::vector<Rational> v;
  v.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    v.push_back(std::visit(
        [&](const auto& g) -> Rational {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, gate::Input>) {
            return x[g.index - 1];
          } else if constexpr (std::is_same_v<T, gate::Arith>) {
            const Rational& a = v[g.left];
            const Rational& b = v[g.right];
            switch (g.op) {
              case ArithOp::Add:
                return a + b;
              case ArithOp::Sub:
                return a - b;
              case ArithOp::Mul:
                return a * b;
              case ArithOp::Div:
                if (b.is_zero())
                  throw ComputationError(RuntimeErrorKind::ConcreteDivisionByZero, "at gate g" + std::to_string(i + 1));
                return a / b;
            }
            return {};
          } else if constexpr (std::is_same_v<T, gate::Constant>) {
            return g.value;
          } else {
            return v[g.operand].sign() >= 0 ? Rational(1) : Rational(0);
          }
        },
        c.gates()[i]));
  }
  return v;
}

bool decide_cdp(const Circuit& c, std::span<const Rational> x) {
  if (!c.is_decision()) throw UsageError("not a decision circuit: the last gate is not a sign gate");
  return !eval_circuit(c, x).back().is_zero();
}

CircuitStats circuit_stats(const Circuit& c) {
  std::vector<std::size_t> depth(c.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    if (const auto* a = std::get_if<gate::Arith>(&g)) {
      depth[i] = 1 + std::max(depth[a->left], depth[a->right]);
    } else if (const auto* s = std::get_if<gate::Sign>(&g)) {
      depth[i] = 1 + depth[s->operand];
    }
    deepest = std::max(deepest, depth[i]);
  }
  return {c.size(), deepest};
}

}  // namespace bsswm
