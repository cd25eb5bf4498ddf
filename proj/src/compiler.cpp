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

#include "bsswm/compiler.hpp"

#include <map>
#include <sstream>

namespace bsswm {

namespace {

using Wire = std::size_t;

// Emits gates, folding operations whose operands are known constants so that
// selectors which are identically 0 or 1 cost nothing.
class WireBuilder {
 public:
  Wire input(std::size_t index) { return push(gate::Input{index}, std::nullopt); }

  Wire constant(const Rational& v) {
    auto key = v.str();
    if (auto it = constants_.find(key); it != constants_.end()) return it->second;
    Wire w = push(gate::Constant{v}, v);
    constants_.emplace(std::move(key), w);
    return w;
  }
  Wire zero() { return constant(0); }
  Wire one() { return constant(1); }

  Wire add(Wire a, Wire b) {
    if (is(a, 0)) return b;
    if (is(b, 0)) return a;
    if (known_[a] && known_[b]) return constant(*known_[a] + *known_[b]);
    return push(gate::Arith{ArithOp::Add, a, b}, std::nullopt);
  }
  Wire sub(Wire a, Wire b) {
    if (is(b, 0)) return a;
    if (a == b) return zero();
    if (known_[a] && known_[b]) return constant(*known_[a] - *known_[b]);
    return push(gate::Arith{ArithOp::Sub, a, b}, std::nullopt);
  }
  Wire mul(Wire a, Wire b) {
    if (is(a, 0) || is(b, 0)) return zero();
    if (is(a, 1)) return b;
    if (is(b, 1)) return a;
    if (known_[a] && known_[b]) return constant(*known_[a] * *known_[b]);
    return push(gate::Arith{ArithOp::Mul, a, b}, std::nullopt);
  }
  // Callers mask divisors, so a known-zero divisor never reaches this point.
  Wire div(Wire a, Wire b) {
    if (is(b, 1)) return a;
    if (is(a, 0)) return zero();
    if (known_[a] && known_[b] && !known_[b]->is_zero()) return constant(*known_[a] / *known_[b]);
    return push(gate::Arith{ArithOp::Div, a, b}, std::nullopt);
  }
  Wire sign(Wire a) { return push(gate::Sign{a}, std::nullopt); }

  Wire sum(const std::vector<Wire>& ws) {
    Wire acc = zero();
    for (Wire w : ws) acc = add(acc, w);
    return acc;
  }

  Circuit finish() { return std::move(circuit_); }

 private:
  bool is(Wire w, long v) const { return known_[w] && *known_[w] == Rational(v); }

  Wire push(Gate g, std::optional<Rational> value) {
    Wire w = circuit_.add(std::move(g));
    known_.push_back(std::move(value));
    return w;
  }

  Circuit circuit_;
  std::vector<std::optional<Rational>> known_;
  std::map<std::string, Wire> constants_;
};

// Node indexes grouped by what they do in one step.
struct NodeClasses {
  std::vector<std::size_t> input, copy, shift_left, shift_right, accept, branch;
  std::map<ComputeOp, std::vector<std::size_t>> compute;
  std::map<std::string, std::pair<Rational, std::vector<std::size_t>>> constant;
};

NodeClasses classify(const Machine& m) {
  NodeClasses k;
  for (std::size_t q = 0; q < m.nodes.size(); ++q) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, node::Input>) {
            k.input.push_back(q);
          } else if constexpr (std::is_same_v<T, node::Copy>) {
            k.copy.push_back(q);
          } else if constexpr (std::is_same_v<T, node::Shift>) {
            (n.dir == ShiftDir::Left ? k.shift_left : k.shift_right).push_back(q);
          } else if constexpr (std::is_same_v<T, node::Compute>) {
            k.compute[n.op].push_back(q);
          } else if constexpr (std::is_same_v<T, node::Constant>) {
            Rational v = std::holds_alternative<ParamRef>(n.value) ? m.parameters.at(std::get<ParamRef>(n.value).index)
                                                                    : std::get<Rational>(n.value);
            auto& slot = k.constant[v.str()];
            slot.first = v;
            slot.second.push_back(q);
          } else if constexpr (std::is_same_v<T, node::Branch>) {
            k.branch.push_back(q);
          } else if constexpr (std::is_same_v<T, node::Halt>) {
            if (n.kind == HaltKind::Accept) k.accept.push_back(q);
          } else if constexpr (std::is_same_v<T, node::Output>) {
            throw UsageError("machines with Output nodes cannot be compiled to decision circuits");
          }
        },
        m.nodes[q]);
  }
  return k;
}

void check_bounds(const CompileBounds& b) {
  if (b.n < 1 || b.steps < 1 || b.half_width < 1) throw UsageError("compile bounds need n, T, W >= 1");
}

}  // namespace

std::size_t compiled_size_bound(const Machine& m, const CompileBounds& b) {
  return b.n + 2 + kGatesPerCellNode * b.steps * (2 * b.half_width + b.n + 2) * m.nodes.size();
}

Circuit compile_machine(const Machine& m, const CompileBounds& b) {
  check_bounds(b);
  validate_machine(m);
  const NodeClasses k = classify(m);
  const std::size_t cells = 2 * b.half_width + 1;
  const std::size_t origin = b.half_width;

  WireBuilder w;
  std::vector<Wire> x(b.n);
  for (std::size_t j = 0; j < b.n; ++j) x[j] = w.input(j + 1);

  std::vector<Wire> state(m.nodes.size(), w.zero());
  state[0] = w.one();
  std::vector<Wire> head(cells, w.zero());
  head[origin] = w.one();
  std::vector<Wire> in_head(b.n + 1, w.zero());
  in_head[0] = w.one();
  std::vector<Wire> value(cells, w.zero());
  Wire accepted = w.zero();

  auto select = [&](const std::vector<std::size_t>& nodes) {
    std::vector<Wire> ws;
    for (std::size_t q : nodes) ws.push_back(state[q]);
    return w.sum(ws);
  };
  auto latch = [&]() {
    Wire at_accept = select(k.accept);
    accepted = w.add(accepted, w.mul(w.sub(w.one(), accepted), at_accept));
  };

  for (std::size_t t = 0; t < b.steps; ++t) {
    latch();

    // operands under the work head
    std::vector<Wire> cur_terms, next_terms;
    for (std::size_t p = 0; p < cells; ++p) {
      cur_terms.push_back(w.mul(head[p], value[p]));
      if (p + 1 < cells) next_terms.push_back(w.mul(head[p], value[p + 1]));
    }
    const Wire cur = w.sum(cur_terms);
    const Wire nxt = w.sum(next_terms);

    // value written at the head by Input / Compute / Constant nodes
    std::vector<Wire> written;
    const Wire sel_input = select(k.input);
    if (!k.input.empty()) {
      std::vector<Wire> terms;
      for (std::size_t j = 0; j < b.n; ++j) terms.push_back(w.mul(in_head[j], x[j]));
      written.push_back(w.mul(sel_input, w.sum(terms)));
    }
    std::vector<Wire> writers{sel_input};
    for (const auto& [op, nodes] : k.compute) {
      Wire sel = select(nodes);
      Wire r = w.zero();
      switch (op) {
        case ComputeOp::Add:
          r = w.add(cur, nxt);
          break;
        case ComputeOp::Sub:
          r = w.sub(cur, nxt);
          break;
        case ComputeOp::Mul:
          r = w.mul(cur, nxt);
          break;
        case ComputeOp::Div: {
          Wire divisor = w.add(w.mul(sel, nxt), w.sub(w.one(), sel));
          r = w.div(cur, divisor);
          break;
        }
      }
      written.push_back(w.mul(sel, r));
      writers.push_back(sel);
    }
    for (const auto& [key, entry] : k.constant) {
      Wire sel = select(entry.second);
      written.push_back(w.mul(sel, w.constant(entry.first)));
      writers.push_back(sel);
    }
    const Wire write_val = w.sum(written);
    const Wire write_sel = w.sum(writers);
    const Wire copy_sel = select(k.copy);
    const Wire copy_val = w.mul(copy_sel, cur);

    // cells
    std::vector<Wire> new_value(cells);
    for (std::size_t p = 0; p < cells; ++p) {
      Wire v = value[p];
      Wire delta = w.sub(write_val, w.mul(write_sel, value[p]));
      v = w.add(v, w.mul(head[p], delta));
      if (p > 0) {
        Wire copy_delta = w.sub(copy_val, w.mul(copy_sel, value[p]));
        v = w.add(v, w.mul(head[p - 1], copy_delta));
      }
      new_value[p] = v;
    }

    // heads
    const Wire right = select(k.shift_right);
    const Wire left = select(k.shift_left);
    const Wire moving = w.add(right, left);
    std::vector<Wire> new_head(cells);
    for (std::size_t p = 0; p < cells; ++p) {
      Wire h = w.sub(head[p], w.mul(head[p], moving));
      if (p > 0) h = w.add(h, w.mul(head[p - 1], right));
      if (p + 1 < cells) h = w.add(h, w.mul(head[p + 1], left));
      new_head[p] = h;
    }
    std::vector<Wire> new_in_head(b.n + 1);
    for (std::size_t j = 0; j <= b.n; ++j) {
      Wire h = w.sub(in_head[j], w.mul(in_head[j], sel_input));
      if (j > 0) h = w.add(h, w.mul(in_head[j - 1], sel_input));
      new_in_head[j] = h;
    }

    // control
    Wire taken = k.branch.empty() ? w.zero() : w.sign(w.sub(cur, nxt));
    std::vector<std::vector<Wire>> incoming(m.nodes.size());
    for (std::size_t q = 0; q < m.nodes.size(); ++q) {
      const Instruction& ins = m.nodes[q];
      if (const auto* br = std::get_if<node::Branch>(&ins)) {
        Wire go = w.mul(state[q], taken);
        incoming[br->taken].push_back(go);
        incoming[br->next].push_back(w.sub(state[q], go));
      } else if (std::holds_alternative<node::Halt>(ins)) {
        incoming[q].push_back(state[q]);
      } else {
        incoming[successors(ins).front()].push_back(state[q]);
      }
    }
    for (std::size_t q = 0; q < m.nodes.size(); ++q) state[q] = w.sum(incoming[q]);

    value = std::move(new_value);
    head = std::move(new_head);
    in_head = std::move(new_in_head);
  }
  latch();
  w.sign(w.sub(accepted, w.one()));
  return w.finish();
}

std::string compiled_circuit_text(const Machine& m, const CompileBounds& b, const Circuit& c) {
  std::ostringstream os;
  os << "# compiled from machine " << m.name << '\n';
  os << "# n = " << b.n << ", T = " << b.steps << ", W = " << b.half_width << '\n';
  os << "# g1..g" << b.n << " read x1..x" << b.n << "; per step: one-hot node, work-head (cells -" << b.half_width
     << ".." << b.half_width << ") and input-head wires, one value wire per cell, latched accept bit\n";
  os << "# last gate: sign(accept - 1)\n";
  os << print_circuit(c);
  return os.str();
}

bool fits_bounds(const Machine& m, std::span<const Rational> x, const CompileBounds& b) {
  if (x.size() != b.n) return false;
  RunLimits limits;
  limits.max_steps = b.steps;
  RunResult r = run(m, x, limits, true);
  if (r.status != RunStatus::Accepted && r.status != RunStatus::Rejected && r.status != RunStatus::HaltedPlain)
    return false;
  const auto w = static_cast<std::int64_t>(b.half_width);
  for (const auto& e : *r.trace) {
    if (e.config.work_head < -w || e.config.work_head > w) return false;
    if (!e.config.work.empty() && (e.config.work.begin()->first < -w || e.config.work.rbegin()->first > w)) return false;
  }
  return true;
}

VerifyReport verify_compilation(const Machine& m, const Circuit& c, std::span<const std::vector<Rational>> samples) {
  VerifyReport rep;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ++rep.samples;
    const auto& x = samples[i];
    RunResult r = run(m, x);
    bool machine_accepts = r.status == RunStatus::Accepted;
    std::string circuit_out;
    bool agree = false;
    try {
      bool bit = decide_cdp(c, x);
      circuit_out = bit ? "1" : "0";
      agree = bit == machine_accepts;
    } catch (const std::exception& e) {
      circuit_out = e.what();
    }
    if (agree) {
      ++rep.matched;
    } else {
      std::string status(to_string(r.status));
      if (r.error) status += std::string("(") + std::string(to_string(*r.error)) + ")";
      rep.mismatches.push_back({i, x, circuit_out, status});
    }
  }
  return rep;
}

}  // namespace bsswm
