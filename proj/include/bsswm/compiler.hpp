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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsswm/circuit.hpp"
#include "bsswm/machine.hpp"

namespace bsswm {

/// Fixed simulation window: n inputs, T steps, work cells -W..W.
struct CompileBounds {
  std::size_t n = 1;
  std::size_t steps = 1;
  std::size_t half_width = 1;
};

/// Gate budget per (step, tape cell, node) triple; see compiled_size_bound.
inline constexpr std::size_t kGatesPerCellNode = 16;

/// Upper bound on the size of compile_machine's output:
/// n + 2 + kGatesPerCellNode * T * (2W + n + 2) * node_count.
std::size_t compiled_size_bound(const Machine& m, const CompileBounds& b);

/// Builds a decision circuit with n inputs that simulates T steps of m on the
/// window -W..W. Per step the state is a one-hot node vector, one-hot work
/// and input head vectors, one value wire per cell and a latched accept bit;
/// every update is an arithmetic multiplex over those selectors, and every
/// divisor d is masked as sel*d + (1 - sel). For any x on which m halts within
/// T steps, stays inside the window and raises no runtime error, the circuit
/// outputs 1 iff m accepts x. Throws UsageError for machines with Output nodes
/// or degenerate bounds.
Circuit compile_machine(const Machine& m, const CompileBounds& b);

/// Circuit text preceded by `#` metadata lines (machine name, bounds and the
/// wire-naming scheme).
std::string compiled_circuit_text(const Machine& m, const CompileBounds& b, const Circuit& c);

/// True when run(m, x) halts within T steps, keeps both heads inside the
/// window and raises no runtime error.
bool fits_bounds(const Machine& m, std::span<const Rational> x, const CompileBounds& b);

struct VerifyMismatch {
  std::size_t sample = 0;
  std::vector<Rational> input;
  std::string circuit;  // "0", "1" or the evaluation error
  std::string machine;  // run status
};

struct VerifyReport {
  std::size_t samples = 0;
  std::size_t matched = 0;
  std::vector<VerifyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares decide_cdp(c, x) with run(m, x) == Accepted for every sample.
VerifyReport verify_compilation(const Machine& m, const Circuit& c, std::span<const std::vector<Rational>> samples);

}  // namespace bsswm
