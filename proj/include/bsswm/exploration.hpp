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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bsswm/machine.hpp"
#include "bsswm/polynomial.hpp"

namespace bsswm {

enum class GraphClass { HaltAccept, HaltReject, HaltPlain, Lasso, BudgetExceeded, RuntimeError };

std::string_view to_string(GraphClass c) noexcept;

struct GraphVertex {
  std::string digest;
  std::size_t node = 0;
  std::uint64_t weak_size = 0;
};

/// Run-reachable configuration graph. Vertices are in discovery order and
/// every edge goes from vertex i to vertex i + 1, except the closing edge of a
/// lasso, which returns to vertex `lasso_prefix`.
struct ConfigGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  GraphClass classification = GraphClass::HaltPlain;
  std::size_t lasso_prefix = 0;  // Lasso only
  std::size_t lasso_cycle = 0;   // Lasso only
  std::optional<RuntimeErrorKind> error;
};

/// Steps forward from the initial configuration, hashing each configuration
/// digest. A repeated digest closes a lasso. Step and space limits yield
/// BudgetExceeded.
ConfigGraph reachable_graph(const Machine& m, std::span<const Rational> x, const RunLimits& limits = {});

/// DOT digraph; labels show the node index and weak size, and a lasso's
/// closing edge is drawn dashed.
std::string export_dot(const ConfigGraph& g);

enum class Relation { NonNegative, Negative, NonZero };

std::string_view to_string(Relation r) noexcept;

struct Literal {
  Polynomial poly;
  Relation rel = Relation::NonNegative;
  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class PathVerdict { Accept, Reject, Halt, DepthLimit, Error };

std::string_view to_string(PathVerdict v) noexcept;

struct PathCondition {
  /// In branch-encounter order.
  std::vector<Literal> literals;
  PathVerdict verdict = PathVerdict::DepthLimit;
  std::uint64_t trace_length = 0;
  std::optional<RuntimeErrorKind> error;
};

/// Depth-first symbolic execution over Z(X1..Xn, A1..Am), taken branch first.
/// A branch on f1 = g1/h1, f2 = g2/h2 records p >= 0 (taken) or p < 0 (not
/// taken) for p = (g1 h2 - g2 h1) h1 h2 with its positive content divided
/// out, plus h != 0 for every non-constant denominator. A constant p decides
/// the branch without a literal. Division by a non-constant fraction records
/// its numerator != 0. Paths holding both p >= 0 and p < 0 are pruned.
std::vector<PathCondition> symbolic_paths(const Machine& m, std::size_t n, std::size_t depth);

/// Exact evaluation of every literal at (x, machine parameters).
bool satisfies(const PathCondition& pc, std::span<const Rational> x, std::span<const Rational> params);

}  // namespace bsswm
