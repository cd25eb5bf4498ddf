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

#include "bsswm/exploration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace bsswm {

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::HaltAccept:
      return "HaltAccept";
    case GraphClass::HaltReject:
      return "HaltReject";
    case GraphClass::HaltPlain:
      return "HaltPlain";
    case GraphClass::Lasso:
      return "Lasso";
    case GraphClass::BudgetExceeded:
      return "BudgetExceeded";
    case GraphClass::RuntimeError:
      return "RuntimeError";
  }
  return "Unknown";
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::NonNegative:
      return ">= 0";
    case Relation::Negative:
      return "< 0";
    case Relation::NonZero:
      return "!= 0";
  }
  return "?";
}

std::string_view to_string(PathVerdict v) noexcept {
  switch (v) {
    case PathVerdict::Accept:
      return "Accept";
    case PathVerdict::Reject:
      return "Reject";
    case PathVerdict::Halt:
      return "Halt";
    case PathVerdict::DepthLimit:
      return "DepthLimit";
    case PathVerdict::Error:
      return "Error";
  }
  return "Unknown";
}

ConfigGraph reachable_graph(const Machine& m, std::span<const Rational> x, const RunLimits& limits) {
  validate_machine(m);
  ConfigGraph g;
  std::unordered_map<std::string, std::size_t> seen;
  Configuration c;

  auto over_space = [&](const ConfigMeasure& cm) {
    return (limits.max_weak_space && cm.weak_size > *limits.max_weak_space) ||
           (limits.max_unit_space && cm.unit_size > *limits.max_unit_space);
  };
  auto visit = [&](const Configuration& cfg) {
    auto cells = cfg.cell_refs();
    ConfigMeasure cm = weak_size_configuration(cells, x.size());
    std::string d = cfg.digest();
    seen.emplace(d, g.vertices.size());
    g.vertices.push_back({std::move(d), cfg.node, cm.weak_size});
    return !over_space(cm);
  };

  if (!visit(c)) {
    g.classification = GraphClass::BudgetExceeded;
    return g;
  }
  for (std::uint64_t steps = 0;; ++steps) {
    StepOutcome out = step(m, x, c);
    if (const auto* h = std::get_if<StepHalted>(&out)) {
      g.classification = h->kind == HaltKind::Accept   ? GraphClass::HaltAccept
                         : h->kind == HaltKind::Reject ? GraphClass::HaltReject
                                                       : GraphClass::HaltPlain;
      return g;
    }
    if (const auto* e = std::get_if<StepError>(&out)) {
      g.classification = GraphClass::RuntimeError;
      g.error = e->kind;
      return g;
    }
    if (steps >= limits.max_steps) {
      g.classification = GraphClass::BudgetExceeded;
      return g;
    }
    c = std::move(std::get<StepNext>(out).next);
    const std::size_t from = g.vertices.size() - 1;
    if (auto it = seen.find(c.digest()); it != seen.end()) {
      g.edges.emplace_back(from, it->second);
      g.classification = GraphClass::Lasso;
      g.lasso_prefix = it->second;
      g.lasso_cycle = g.vertices.size() - it->second;
      return g;
    }
    g.edges.emplace_back(from, from + 1);
    if (!visit(c)) {
      g.classification = GraphClass::BudgetExceeded;
      return g;
    }
  }
}

std::string export_dot(const ConfigGraph& g) {
  std::ostringstream os;
  os << "digraph configurations {\n";
  os << "  label=\"" << to_string(g.classification);
  if (g.classification == GraphClass::Lasso) os << " (prefix " << g.lasso_prefix << ", cycle " << g.lasso_cycle << ")";
  if (g.error) os << " (" << to_string(*g.error) << ")";
  os << "\";\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  c" << i << " [label=\"q" << g.vertices[i].node << "\\nSize_w=" << g.vertices[i].weak_size << "\"];\n";
  for (const auto& [a, b] : g.edges) {
    os << "  c" << a << " -> c" << b;
    if (b <= a) os << " [style=dashed, color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

struct SymState {
  std::size_t node = 0;
  std::size_t input_head = 0;
  std::int64_t work_head = 0;
  std::map<std::int64_t, Fraction> work;
  std::vector<Literal> literals;
  std::uint64_t steps = 0;
};

struct Dead {
  RuntimeErrorKind kind;
};

const Fraction& read(const SymState& s, std::int64_t coord) {
  auto it = s.work.find(coord);
  if (it == s.work.end()) throw Dead{RuntimeErrorKind::ReadEmptyCell};
  return it->second;
}

Polynomial positive_part(const Polynomial& p) {
  Integer c = p.content();
  return c > 1 ? p.divided_exactly(c) : p;
}

// Appends a literal unless already present. Returns false when it contradicts
// an existing one.
bool add_literal(std::vector<Literal>& lits, Literal lit) {
  for (const auto& l : lits) {
    if (l.poly != lit.poly) continue;
    if (l.rel == lit.rel) return true;
    bool opposite = (l.rel == Relation::NonNegative && lit.rel == Relation::Negative) ||
                    (l.rel == Relation::Negative && lit.rel == Relation::NonNegative);
    if (opposite) return false;
  }
  lits.push_back(std::move(lit));
  return true;
}

void require_nonzero(std::vector<Literal>& lits, const Polynomial& p) {
  if (!p.is_constant()) add_literal(lits, {positive_part(p), Relation::NonZero});
}

}  // namespace

std::vector<PathCondition> symbolic_paths(const Machine& m, std::size_t n, std::size_t depth) {
  validate_machine(m);
  const Arity arity = m.arity(n);
  std::vector<PathCondition> out;
  std::vector<SymState> stack;
  stack.emplace_back();

  auto finish = [&](SymState& s, PathVerdict v, std::optional<RuntimeErrorKind> e = std::nullopt) {
    out.push_back({std::move(s.literals), v, s.steps, e});
  };

  while (!stack.empty()) {
    SymState s = std::move(stack.back());
    stack.pop_back();
    try {
      const Instruction& ins = m.nodes.at(s.node);
      if (const auto* h = std::get_if<node::Halt>(&ins)) {
        finish(s, h->kind == HaltKind::Accept   ? PathVerdict::Accept
                  : h->kind == HaltKind::Reject ? PathVerdict::Reject
                                                : PathVerdict::Halt);
        continue;
      }
      if (s.steps >= depth) {
        finish(s, PathVerdict::DepthLimit);
        continue;
      }
      ++s.steps;
      const std::int64_t hd = s.work_head;
      if (const auto* br = std::get_if<node::Branch>(&ins)) {
        const Fraction& f1 = read(s, hd);
        const Fraction& f2 = read(s, hd + 1);
        Polynomial p = (f1.num() * f2.den() - f2.num() * f1.den()) * f1.den() * f2.den();
        if (p.is_constant()) {
          s.node = p.constant_term() >= 0 ? br->taken : br->next;
          stack.push_back(std::move(s));
          continue;
        }
        p = positive_part(p);
        require_nonzero(s.literals, f1.den());
        require_nonzero(s.literals, f2.den());
        SymState fall = s;
        fall.node = br->next;
        s.node = br->taken;
        // pushed in reverse so the taken side is explored first
        if (add_literal(fall.literals, {p, Relation::Negative})) stack.push_back(std::move(fall));
        if (add_literal(s.literals, {std::move(p), Relation::NonNegative})) stack.push_back(std::move(s));
        continue;
      }
      std::visit(
          [&](const auto& nd) {
            using T = std::decay_t<decltype(nd)>;
            if constexpr (!std::is_same_v<T, node::Halt> && !std::is_same_v<T, node::Branch>) {
              s.node = nd.next;
              if constexpr (std::is_same_v<T, node::Input>) {
                if (s.input_head >= n) throw Dead{RuntimeErrorKind::InputExhausted};
                s.work.insert_or_assign(hd, Fraction::input(arity, s.input_head++));
              } else if constexpr (std::is_same_v<T, node::Output>) {
                read(s, hd);
              } else if constexpr (std::is_same_v<T, node::Compute>) {
                const Fraction& a = read(s, hd);
                const Fraction& b = read(s, hd + 1);
                FieldOp op = nd.op == ComputeOp::Add   ? FieldOp::Add
                             : nd.op == ComputeOp::Sub ? FieldOp::Sub
                             : nd.op == ComputeOp::Mul ? FieldOp::Mul
                                                       : FieldOp::Div;
                if (op == FieldOp::Div) {
                  if (b.is_zero()) throw Dead{RuntimeErrorKind::SymbolicDivisionByZero};
                  require_nonzero(s.literals, b.num());
                }
                s.work.insert_or_assign(hd, frac_op(a, b, op));
              } else if constexpr (std::is_same_v<T, node::Constant>) {
                if (const auto* pr = std::get_if<ParamRef>(&nd.value))
                  s.work.insert_or_assign(hd, Fraction::parameter(arity, pr->index));
                else
                  s.work.insert_or_assign(hd, Fraction::constant(arity, std::get<Rational>(nd.value)));
              } else if constexpr (std::is_same_v<T, node::Shift>) {
                s.work_head += nd.dir == ShiftDir::Left ? -1 : 1;
              } else if constexpr (std::is_same_v<T, node::Copy>) {
                s.work.insert_or_assign(hd + 1, read(s, hd));
              }
            }
          },
          ins);
      stack.push_back(std::move(s));
    } catch (const Dead& d) {
      finish(s, PathVerdict::Error, d.kind);
    } catch (const ComputationError& e) {
      finish(s, PathVerdict::Error, e.kind());
    }
  }
  return out;
}

bool satisfies(const PathCondition& pc, std::span<const Rational> x, std::span<const Rational> params) {
  std::vector<Rational> point(x.begin(), x.end());
  point.insert(point.end(), params.begin(), params.end());
  for (const auto& lit : pc.literals) {
    int s = lit.poly.evaluate(point).sign();
    bool ok = lit.rel == Relation::NonNegative ? s >= 0 : lit.rel == Relation::Negative ? s < 0 : s != 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace bsswm
