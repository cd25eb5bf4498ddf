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

// Machine description format:
//
//   machine <name>
//   inputs <n>                      # optional hint
//   params A1 = 3/2, A2 = -7        # optional
//   nodes:
//     0: start -> 1
//     1: compute add -> 2
//     2: branch 4 -> 3
//     3: halt reject
//     4: halt accept

#include <cctype>
#include <map>
#include <sstream>

#include "bsswm/machine.hpp"

namespace bsswm {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_punct = [](char c) { return c == ':' || c == ',' || c == '='; };
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (is_punct(c)) {
      out.push_back({std::string(1, c), i + 1});
      ++i;
    } else {
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && !is_punct(line[i]) &&
             !(line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>'))
        ++i;
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

class LineCursor {
 public:
  LineCursor(std::vector<Token> tokens, std::size_t line, std::size_t end_column)
      : tokens_(std::move(tokens)), line_(line), end_column_(end_column) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) fail("unexpected end of line");
    return tokens_[pos_];
  }
  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view what) {
    const Token& t = next();
    if (t.text != what) fail("expected '" + std::string(what) + "', found '" + t.text + "'", t.column);
  }
  void expect_end() const {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'", tokens_[pos_].column);
  }
  std::size_t index(const Token& t) const {
    if (t.text.empty() || t.text.size() > 18) fail("expected a node index", t.column);
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a node index, found '" + t.text + "'", t.column);
    return std::stoull(t.text);
  }
  [[noreturn]] void fail(const std::string& what, std::size_t column = 0) const {
    throw ParseError(what, line_, column == 0 ? end_column_ : column);
  }
  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t line_;
  std::size_t end_column_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> param_symbol(std::string_view s) {
  if (s.size() < 2 || s[0] != 'A') return std::nullopt;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  std::size_t k = std::stoull(std::string(s.substr(1)));
  if (k == 0) return std::nullopt;
  return k - 1;
}

Rational rational_token(const LineCursor& cur, const Token& t) {
  try {
    return Rational::parse(t.text);
  } catch (const ParseError&) {
    cur.fail("malformed rational '" + t.text + "'", t.column);
  }
}

struct SuccessorRef {
  std::size_t target;
  std::size_t line;
  std::size_t column;
};

}  // namespace

Machine parse_machine(std::string_view text) {
  Machine m;
  bool have_name = false;
  bool in_nodes = false;
  std::map<std::size_t, Instruction> nodes;
  std::map<std::size_t, std::size_t> node_line;
  std::vector<SuccessorRef> refs;
  std::map<std::size_t, Rational> params;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    LineCursor cur(std::move(tokens), line_no, raw.size() + 1);

    const Token& head = cur.peek();
    if (!in_nodes) {
      if (head.text == "machine") {
        cur.next();
        if (have_name) cur.fail("duplicate 'machine' line", head.column);
        m.name = cur.next().text;
        have_name = true;
        cur.expect_end();
      } else if (head.text == "inputs") {
        cur.next();
        const Token& t = cur.next();
        m.n_hint = cur.index(t);
        cur.expect_end();
      } else if (head.text == "params") {
        cur.next();
        while (true) {
          const Token& sym = cur.next();
          auto k = param_symbol(sym.text);
          if (!k) cur.fail("expected a parameter symbol Ak, found '" + sym.text + "'", sym.column);
          if (params.count(*k)) cur.fail("duplicate parameter " + sym.text, sym.column);
          cur.expect("=");
          params.emplace(*k, rational_token(cur, cur.next()));
          if (cur.done()) break;
          cur.expect(",");
        }
      } else if (head.text == "nodes") {
        cur.next();
        cur.expect(":");
        cur.expect_end();
        if (!have_name) cur.fail("missing 'machine <name>' line", head.column);
        in_nodes = true;
      } else {
        cur.fail("unknown directive '" + head.text + "'", head.column);
      }
      continue;
    }

    const Token& idx_tok = cur.next();
    std::size_t idx = cur.index(idx_tok);
    if (nodes.count(idx)) cur.fail("duplicate node index " + idx_tok.text, idx_tok.column);
    cur.expect(":");
    const Token& kind = cur.next();

    auto successor = [&]() {
      cur.expect("->");
      const Token& t = cur.next();
      std::size_t target = cur.index(t);
      refs.push_back({target, cur.line(), t.column});
      return target;
    };

    Instruction ins;
    if (kind.text == "start") {
      ins = node::Start{successor()};
    } else if (kind.text == "input") {
      ins = node::Input{successor()};
    } else if (kind.text == "output") {
      ins = node::Output{successor()};
    } else if (kind.text == "copy") {
      ins = node::Copy{successor()};
    } else if (kind.text == "compute") {
      const Token& op = cur.next();
      ComputeOp o;
      if (op.text == "add") {
        o = ComputeOp::Add;
      } else if (op.text == "sub") {
        o = ComputeOp::Sub;
      } else if (op.text == "mul") {
        o = ComputeOp::Mul;
      } else if (op.text == "div") {
        o = ComputeOp::Div;
      } else {
        cur.fail("unknown compute operation '" + op.text + "'", op.column);
      }
      ins = node::Compute{o, successor()};
    } else if (kind.text == "const") {
      const Token& v = cur.next();
      node::Constant c;
      if (auto k = param_symbol(v.text)) {
        c.value = ParamRef{*k};
      } else {
        c.value = rational_token(cur, v);
      }
      c.next = successor();
      ins = c;
    } else if (kind.text == "branch") {
      const Token& t = cur.next();
      std::size_t taken = cur.index(t);
      refs.push_back({taken, cur.line(), t.column});
      ins = node::Branch{taken, successor()};
    } else if (kind.text == "shift") {
      const Token& d = cur.next();
      ShiftDir dir;
      if (d.text == "left") {
        dir = ShiftDir::Left;
      } else if (d.text == "right") {
        dir = ShiftDir::Right;
      } else {
        cur.fail("expected 'left' or 'right', found '" + d.text + "'", d.column);
      }
      ins = node::Shift{dir, successor()};
    } else if (kind.text == "halt") {
      HaltKind hk = HaltKind::Plain;
      if (!cur.done()) {
        const Token& h = cur.next();
        if (h.text == "accept") {
          hk = HaltKind::Accept;
        } else if (h.text == "reject") {
          hk = HaltKind::Reject;
        } else {
          cur.fail("expected 'accept' or 'reject', found '" + h.text + "'", h.column);
        }
      }
      ins = node::Halt{hk};
    } else {
      cur.fail("unknown node kind '" + kind.text + "'", kind.column);
    }
    cur.expect_end();
    if (std::holds_alternative<node::Start>(ins) && idx != 0)
      cur.fail("the start node must have index 0", idx_tok.column);
    if (idx == 0 && !std::holds_alternative<node::Start>(ins)) cur.fail("node 0 must be the start node", kind.column);
    nodes.emplace(idx, ins);
    node_line.emplace(idx, line_no);
  }

  if (!have_name) throw ParseError("missing 'machine <name>' line", line_no, 1);
  if (!in_nodes) throw ParseError("missing 'nodes:' section", line_no, 1);
  if (nodes.empty()) throw ParseError("machine has no nodes", line_no, 1);

  std::size_t expected = 0;
  for (const auto& [idx, ins] : nodes) {
    if (idx != expected) throw ParseError("node indexes must be contiguous; node " + std::to_string(expected) + " is missing", node_line[idx], 1);
    m.nodes.push_back(ins);
    ++expected;
  }
  for (const auto& r : refs)
    if (r.target >= m.nodes.size())
      throw ParseError("dangling successor " + std::to_string(r.target) + " (machine has " +
                           std::to_string(m.nodes.size()) + " nodes)",
                       r.line, r.column);

  std::size_t k = 0;
  for (const auto& [idx, value] : params) {
    if (idx != k) throw ParseError("parameters must be A1..Am without gaps; A" + std::to_string(k + 1) + " is missing");
    m.parameters.push_back(value);
    ++k;
  }
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    if (auto* c = std::get_if<node::Constant>(&m.nodes[i])) {
      if (auto* p = std::get_if<ParamRef>(&c->value); p && p->index >= m.parameters.size())
        throw ParseError("undeclared parameter A" + std::to_string(p->index + 1), node_line[i], 1);
    }
  }
  validate_machine(m);
  return m;
}

std::string_view to_string(ComputeOp op) noexcept {
  switch (op) {
    case ComputeOp::Add:
      return "add";
    case ComputeOp::Sub:
      return "sub";
    case ComputeOp::Mul:
      return "mul";
    case ComputeOp::Div:
      return "div";
  }
  return "?";
}

std::vector<std::size_t> successors(const Instruction& ins) {
  return std::visit(
      [](const auto& n) -> std::vector<std::size_t> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, node::Halt>) {
          return {};
        } else if constexpr (std::is_same_v<T, node::Branch>) {
          return {n.taken, n.next};
        } else {
          return {n.next};
        }
      },
      ins);
}

void validate_machine(const Machine& m) {
  if (m.nodes.empty()) throw UsageError("machine has no nodes");
  if (!std::holds_alternative<node::Start>(m.nodes[0])) throw UsageError("node 0 must be the start node");
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    if (i > 0 && std::holds_alternative<node::Start>(m.nodes[i])) throw UsageError("more than one start node");
    for (std::size_t s : successors(m.nodes[i]))
      if (s >= m.nodes.size()) throw UsageError("node " + std::to_string(i) + " has dangling successor " + std::to_string(s));
    if (auto* c = std::get_if<node::Constant>(&m.nodes[i])) {
      if (auto* p = std::get_if<ParamRef>(&c->value); p && p->index >= m.parameters.size())
        throw UsageError("node " + std::to_string(i) + " references an undeclared parameter");
    }
  }
}

std::string print_machine(const Machine& m) {
  std::ostringstream os;
  os << "machine " << m.name << '\n';
  if (m.n_hint) os << "inputs " << *m.n_hint << '\n';
  if (!m.parameters.empty()) {
    os << "params ";
    for (std::size_t k = 0; k < m.parameters.size(); ++k) {
      if (k) os << ", ";
      os << 'A' << k + 1 << " = " << m.parameters[k];
    }
    os << '\n';
  }
  os << "nodes:\n";
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    os << "  " << i << ": ";
    std::visit(
        [&os](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, node::Start>) {
            os << "start -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Input>) {
            os << "input -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Output>) {
            os << "output -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Copy>) {
            os << "copy -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Compute>) {
            os << "compute " << to_string(n.op) << " -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Constant>) {
            os << "const ";
            if (auto* p = std::get_if<ParamRef>(&n.value)) {
              os << 'A' << p->index + 1;
            } else {
              os << std::get<Rational>(n.value);
            }
            os << " -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Branch>) {
            os << "branch " << n.taken << " -> " << n.next;
          } else if constexpr (std::is_same_v<T, node::Shift>) {
            os << "shift " << (n.dir == ShiftDir::Left ? "left" : "right") << " -> " << n.next;
          } else {
            os << "halt";
            if (n.kind == HaltKind::Accept) os << " accept";
            if (n.kind == HaltKind::Reject) os << " reject";
          }
        },
        m.nodes[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace bsswm
