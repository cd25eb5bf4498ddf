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

#include "bsswm/machine.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bsswm {

std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Accepted:
      return "Accepted";
    case RunStatus::Rejected:
      return "Rejected";
    case RunStatus::HaltedPlain:
      return "HaltedPlain";
    case RunStatus::StepLimit:
      return "StepLimit";
    case RunStatus::SpaceLimit:
      return "SpaceLimit";
    case RunStatus::RuntimeError:
      return "RuntimeError";
  }
  return "Unknown";
}

std::vector<CellRef> Configuration::cell_refs() const {
  std::vector<CellRef> refs;
  refs.reserve(work.size());
  for (const auto& [i, cell] : work) refs.push_back({i, std::cref(cell.symbolic)});
  return refs;
}

std::string Configuration::digest() const {
  std::ostringstream os;
  os << "q" << node << " i" << input_head << " h" << work_head << " o" << output_head << " |";
  for (const auto& [i, cell] : work) os << ' ' << i << '=' << cell.symbolic.str() << '@' << cell.value;
  os << " | " << format_rational_vector(output);
  return os.str();
}

namespace {

// Errors raised while executing a node; converted into StepError.
struct Fault {
  RuntimeErrorKind kind;
};

const Cell& read(const Configuration& c, std::int64_t coord) {
  auto it = c.work.find(coord);
  if (it == c.work.end()) throw Fault{RuntimeErrorKind::ReadEmptyCell};
  return it->second;
}

Cell compute(ComputeOp op, const Cell& a, const Cell& b) {
  switch (op) {
    case ComputeOp::Add:
      return {a.value + b.value, a.symbolic + b.symbolic};
    case ComputeOp::Sub:
      return {a.value - b.value, a.symbolic - b.symbolic};
    case ComputeOp::Mul:
      return {a.value * b.value, a.symbolic * b.symbolic};
    case ComputeOp::Div:
      if (b.value.is_zero()) throw Fault{RuntimeErrorKind::ConcreteDivisionByZero};
      if (b.symbolic.is_zero()) throw Fault{RuntimeErrorKind::SymbolicDivisionByZero};
      return {a.value / b.value, a.symbolic / b.symbolic};
  }
  throw Fault{RuntimeErrorKind::ConcreteDivisionByZero};
}

}  // namespace

StepOutcome step(const Machine& m, std::span<const Rational> input, const Configuration& c) {
  if (c.node >= m.nodes.size()) throw UsageError("configuration points at a missing node");
  const Arity arity = m.arity(input.size());
  try {
    return std::visit(
        [&](const auto& n) -> StepOutcome {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, node::Halt>) {
            return StepHalted{n.kind};
          } else {
            StepNext out{c, 1};
            Configuration& next = out.next;
            next.node = n.next;
            const std::int64_t h = c.work_head;
            if constexpr (std::is_same_v<T, node::Input>) {
              if (c.input_head >= input.size()) throw Fault{RuntimeErrorKind::InputExhausted};
              next.work[h] = Cell{input[c.input_head], Fraction::input(arity, c.input_head)};
              ++next.input_head;
            } else if constexpr (std::is_same_v<T, node::Output>) {
              next.output.push_back(read(c, h).value);
              ++next.output_head;
            } else if constexpr (std::is_same_v<T, node::Compute>) {
              Cell r = compute(n.op, read(c, h), read(c, h + 1));
              out.cost = weak_cost_transition(TransitionKind::Computation, r.symbolic);
              next.work[h] = std::move(r);
            } else if constexpr (std::is_same_v<T, node::Constant>) {
              if (const auto* p = std::get_if<ParamRef>(&n.value)) {
                next.work[h] = Cell{m.parameters.at(p->index), Fraction::parameter(arity, p->index)};
              } else {
                const Rational& lit = std::get<Rational>(n.value);
                next.work[h] = Cell{lit, Fraction::constant(arity, lit)};
              }
            } else if constexpr (std::is_same_v<T, node::Branch>) {
              next.node = read(c, h).value >= read(c, h + 1).value ? n.taken : n.next;
            } else if constexpr (std::is_same_v<T, node::Shift>) {
              next.work_head += n.dir == ShiftDir::Left ? -1 : 1;
            } else if constexpr (std::is_same_v<T, node::Copy>) {
              next.work[h + 1] = read(c, h);
            }
            return out;
          }
        },
        m.nodes[c.node]);
  } catch (const Fault& f) {
    return StepError{f.kind};
  } catch (const ComputationError& e) {
    return StepError{e.kind()};
  }
}

RunResult run(const Machine& m, std::span<const Rational> input, const RunLimits& limits, bool trace) {
  if (limits.max_steps < 1) throw UsageError("max_steps must be at least 1");
  validate_machine(m);
  RunResult r;
  r.input_count = input.size();
  if (trace) r.trace.emplace();

  Configuration c;
  std::uint64_t cost = 0;
  while (true) {
    auto cells = c.cell_refs();
    ConfigMeasure measure = weak_size_configuration(cells, input.size());
    if (r.steps == 0 || measure.weak_size > r.weak_space) {
      r.weak_space = measure.weak_size;
      r.best_offset = measure.best_offset;
    }
    r.unit_space = std::max(r.unit_space, measure.unit_size);
    bool over_space = (limits.max_weak_space && measure.weak_size > *limits.max_weak_space) ||
                      (limits.max_unit_space && measure.unit_size > *limits.max_unit_space);
    if (trace) r.trace->push_back(TraceEntry{r.steps, c, std::move(measure), cost});
    if (over_space) {
      r.status = RunStatus::SpaceLimit;
      break;
    }

    if (const auto* halt = std::get_if<node::Halt>(&m.nodes[c.node])) {
      r.status = halt->kind == HaltKind::Accept   ? RunStatus::Accepted
                 : halt->kind == HaltKind::Reject ? RunStatus::Rejected
                                                  : RunStatus::HaltedPlain;
      break;
    }
    if (r.steps >= limits.max_steps) {
      r.status = RunStatus::StepLimit;
      break;
    }
    StepOutcome out = step(m, input, c);
    if (auto* err = std::get_if<StepError>(&out)) {
      r.status = RunStatus::RuntimeError;
      r.error = err->kind;
      break;
    }
    auto& next = std::get<StepNext>(out);
    c = std::move(next.next);
    cost = next.cost;
    r.weak_time += cost;
    ++r.steps;
  }
  r.output = c.output;
  return r;
}

namespace {

// 2^a < b^k, exactly.
bool pow2_less_than_power(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
  Integer lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, a);
  mpz_ui_pow_ui(rhs.get_mpz_t(), b, k);
  return lhs < rhs;
}

}  // namespace

bool budget_applies(const Budget& b, std::size_t n) { return !std::holds_alternative<budget::Log>(b) || n >= 2; }

bool check_budget(const RunResult& r, std::size_t n, const Budget& b) {
  return std::visit(
      [&](const auto& bud) -> bool {
        using T = std::decay_t<decltype(bud)>;
        if constexpr (std::is_same_v<T, budget::Log>) {
          if (n < 2) throw UsageError("a logarithmic budget needs n >= 2");
          if (bud.k == 0) return false;
          // ws < k log2 n  <=>  2^ws < n^k
          return pow2_less_than_power(r.weak_space, n, bud.k);
        } else if constexpr (std::is_same_v<T, budget::Poly>) {
          Integer bound;
          mpz_ui_pow_ui(bound.get_mpz_t(), n, bud.d);
          bound *= static_cast<unsigned long>(bud.k);
          return Integer(static_cast<unsigned long>(r.weak_space)) < bound;
        } else {
          return r.weak_space < bud.m;
        }
      },
      b);
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw UsageError("malformed budget '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Budget parse_budget(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError("malformed budget '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  if (kind == "log") return budget::Log{parse_u64(args, text)};
  if (kind == "const") return budget::Const{parse_u64(args, text)};
  if (kind == "poly") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw UsageError("malformed budget '" + std::string(text) + "'");
    return budget::Poly{parse_u64(args.substr(0, comma), text), parse_u64(args.substr(comma + 1), text)};
  }
  throw UsageError("unknown budget kind '" + std::string(kind) + "'");
}

std::string format_budget(const Budget& b) {
  return std::visit(
      [](const auto& bud) -> std::string {
        using T = std::decay_t<decltype(bud)>;
        if constexpr (std::is_same_v<T, budget::Log>) {
          return "log:" + std::to_string(bud.k);
        } else if constexpr (std::is_same_v<T, budget::Poly>) {
          return "poly:" + std::to_string(bud.k) + "," + std::to_string(bud.d);
        } else {
          return "const:" + std::to_string(bud.m);
        }
      },
      b);
}

bool check_flogspace_output(const Machine& machine, const RunResult& r, std::uint64_t m) {
  if (!r.trace) throw UsageError("output-size check needs a traced run");
  for (const auto& e : *r.trace) {
    const Configuration& c = e.config;
    if (!std::holds_alternative<node::Output>(machine.nodes.at(c.node))) continue;
    auto it = c.work.find(c.work_head);
    // an Output on an empty cell faults before writing anything
    if (it == c.work.end()) continue;
    if (weak_size_cell(it->second.symbolic, r.input_count) >= m) return false;
  }
  return true;
}

AuditReport run_symbolic_concrete_audit(const Machine& m, std::span<const Rational> input, const RunLimits& limits) {
  AuditReport rep;
  rep.run = run(m, input, limits, true);
  for (const auto& e : *rep.run.trace) {
    ++rep.configurations;
    for (const auto& [coord, cell] : e.config.work) {
      ++rep.cells_checked;
      std::string actual;
      bool ok = false;
      try {
        Rational v = cell.symbolic.evaluate(input, m.parameters);
        ok = v == cell.value;
        actual = v.str();
      } catch (const ComputationError& err) {
        actual = err.what();
      }
      if (!ok && rep.clean) {
        rep.clean = false;
        rep.first_mismatch = AuditMismatch{e.step, coord, cell.value.str(), actual};
      }
    }
  }
  return rep;
}

}  // namespace bsswm
