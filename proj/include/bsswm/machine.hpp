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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsswm/errors.hpp"
#include "bsswm/fraction.hpp"
#include "bsswm/measures.hpp"
#include "bsswm/rational.hpp"

namespace bsswm {

enum class ComputeOp { Add, Sub, Mul, Div };
enum class ShiftDir { Left, Right };
enum class HaltKind { Accept, Reject, Plain };

std::string_view to_string(ComputeOp op) noexcept;

/// Reference to parameter A_{index+1}.
struct ParamRef {
  std::size_t index = 0;
  friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

namespace node {

struct Start {
  std::size_t next = 0;
  friend bool operator==(const Start&, const Start&) = default;
};
struct Input {
  std::size_t next = 0;
  friend bool operator==(const Input&, const Input&) = default;
};
struct Output {
  std::size_t next = 0;
  friend bool operator==(const Output&, const Output&) = default;
};
/// work[h] := work[h] op work[h+1]
struct Compute {
  ComputeOp op = ComputeOp::Add;
  std::size_t next = 0;
  friend bool operator==(const Compute&, const Compute&) = default;
};
/// work[h] := literal or parameter
struct Constant {
  std::variant<Rational, ParamRef> value;
  std::size_t next = 0;
  friend bool operator==(const Constant&, const Constant&) = default;
};
/// Goes to `taken` when work[h] >= work[h+1], to `next` otherwise.
struct Branch {
  std::size_t taken = 0;
  std::size_t next = 0;
  friend bool operator==(const Branch&, const Branch&) = default;
};
struct Shift {
  ShiftDir dir = ShiftDir::Right;
  std::size_t next = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};
/// work[h+1] := work[h]
struct Copy {
  std::size_t next = 0;
  friend bool operator==(const Copy&, const Copy&) = default;
};
struct Halt {
  HaltKind kind = HaltKind::Plain;
  friend bool operator==(const Halt&, const Halt&) = default;
};

}  // namespace node

using Instruction = std::variant<node::Start, node::Input, node::Output, node::Compute, node::Constant, node::Branch,
                                 node::Shift, node::Copy, node::Halt>;

/// Successor indexes named by an instruction (none for Halt, two for Branch).
std::vector<std::size_t> successors(const Instruction& ins);

struct Machine {
  std::string name;
  std::optional<std::size_t> n_hint;
  /// Values of A1..Am.
  std::vector<Rational> parameters;
  std::vector<Instruction> nodes;

  Arity arity(std::size_t n) const { return Arity{n, parameters.size()}; }
  friend bool operator==(const Machine&, const Machine&) = default;
};

/// Parses the line-oriented machine description format. Diagnostics carry
/// line and column.
Machine parse_machine(std::string_view text);
std::string print_machine(const Machine& m);
/// Structural checks shared by the parser and programmatic construction:
/// single Start at index 0, valid successors, parameter references in range.
void validate_machine(const Machine& m);

struct Cell {
  Rational value;
  Fraction symbolic;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Configuration {
  std::size_t node = 0;
  std::size_t input_head = 0;
  std::int64_t work_head = 0;
  std::size_t output_head = 0;
  /// Only cells that have been written appear here.
  std::map<std::int64_t, Cell> work;
  std::vector<Rational> output;

  std::vector<CellRef> cell_refs() const;
  /// Canonical text identifying the configuration (fractions are canonical,
  /// so equal configurations have equal digests).
  std::string digest() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct StepNext {
  Configuration next;
  std::uint64_t cost = 1;
};
struct StepHalted {
  HaltKind kind;
};
struct StepError {
  RuntimeErrorKind kind;
};
using StepOutcome = std::variant<StepNext, StepHalted, StepError>;

/// One transition from c. The input vector is fixed for the whole run.
StepOutcome step(const Machine& m, std::span<const Rational> input, const Configuration& c);

struct RunLimits {
  std::uint64_t max_steps = 1'000'000;
  std::optional<std::uint64_t> max_weak_space;
  std::optional<std::uint64_t> max_unit_space;
};

enum class RunStatus { Accepted, Rejected, HaltedPlain, StepLimit, SpaceLimit, RuntimeError };

std::string_view to_string(RunStatus s) noexcept;

struct TraceEntry {
  std::uint64_t step = 0;
  Configuration config;
  ConfigMeasure measure;
  /// Weak cost of the transition that produced this configuration (0 for c0).
  std::uint64_t cost = 0;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct RunResult {
  RunStatus status = RunStatus::HaltedPlain;
  std::optional<RuntimeErrorKind> error;
  std::vector<Rational> output;
  std::size_t input_count = 0;
  std::uint64_t steps = 0;
  std::uint64_t weak_time = 0;
  std::uint64_t weak_space = 0;
  std::uint64_t unit_space = 0;
  /// Offset minimising the configuration that attains weak_space (first one).
  std::size_t best_offset = 0;
  std::optional<std::vector<TraceEntry>> trace;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Runs from the initial configuration (node 0, empty work tape, heads at
/// 0). Never throws for machine-level failures; they land in `status`.
RunResult run(const Machine& m, std::span<const Rational> input, const RunLimits& limits = {}, bool trace = false);

namespace budget {
struct Log {
  std::uint64_t k;
};
struct Poly {
  std::uint64_t k;
  std::uint64_t d;
};
struct Const {
  std::uint64_t m;
};
}  // namespace budget
using Budget = std::variant<budget::Log, budget::Poly, budget::Const>;

/// False when the budget is undefined for n inputs (log budgets need n >= 2).
bool budget_applies(const Budget& b, std::size_t n);

/// Log: weak_space < k log2 n (n >= 2). Poly: weak_space < k n^d.
/// Const: weak_space < m. Decided exactly with integer arithmetic.
bool check_budget(const RunResult& r, std::size_t n, const Budget& b);
/// `log:K`, `poly:K,D` or `const:M`.
Budget parse_budget(std::string_view text);
std::string format_budget(const Budget& b);

/// True iff at every traced configuration sitting on an Output node the
/// cell under the work head has weak size (minimised over offsets) below m.
bool check_flogspace_output(const Machine& machine, const RunResult& r, std::uint64_t m);

struct AuditMismatch {
  std::uint64_t step = 0;
  std::int64_t coordinate = 0;
  std::string expected;  // concrete cell value
  std::string actual;    // evaluation of the symbolic fraction, or the error
};

struct AuditReport {
  bool clean = true;
  std::uint64_t configurations = 0;
  std::uint64_t cells_checked = 0;
  std::optional<AuditMismatch> first_mismatch;
  RunResult run;
};

/// Re-evaluates every symbolic cell of every traced configuration at the
/// run's input and parameters, and compares with the concrete value.
AuditReport run_symbolic_concrete_audit(const Machine& m, std::span<const Rational> input,
                                        const RunLimits& limits = {});

}  // namespace bsswm
