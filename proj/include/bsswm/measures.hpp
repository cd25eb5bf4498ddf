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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bsswm/fraction.hpp"
#include "bsswm/polynomial.hpp"

namespace bsswm {

/// ceil(log2(|c| + 1)), the binary digit count of |c|.
std::uint64_t height(const Integer& c);

/// Statistics of the weak size N * (S + V*R + V*D) of one polynomial at
/// one offset. All logarithms are base 2.
struct WeakSizeBreakdown {
  std::uint64_t terms = 0;      // N: non-zero monomials
  std::uint64_t s_bits = 0;     // ceil(log2(2*S_max + 1))
  std::uint64_t d_bits = 0;     // ceil(log2(deg + 1))
  std::uint64_t v = 0;          // max input variables in one monomial
  std::uint64_t r_bits = 0;     // ceil(log2(range_raw + 1))
  std::uint64_t offset = 0;
  std::uint64_t range_raw = 0;  // max over Var of (i + offset) mod n, 0 if Var is empty
  std::uint64_t total = 0;

  friend bool operator==(const WeakSizeBreakdown&, const WeakSizeBreakdown&) = default;
};

/// Recomputes N * (S + V*R + V*D) from the stored statistics.
std::uint64_t breakdown_total(const WeakSizeBreakdown& b);

/// Requires 0 <= offset < n, with g's input arity equal to n. For n = 0 the
/// single offset 0 is accepted. Throws UsageError otherwise.
WeakSizeBreakdown weak_size_poly(const Polynomial& g, std::size_t offset, std::size_t n);

/// Max of the weak sizes of numerator and denominator; the zero fraction 0/1
/// has weak size 0.
std::uint64_t weak_size_fraction(const Fraction& f, std::size_t offset, std::size_t n);

/// A non-empty work-tape cell seen through its symbolic content.
struct CellRef {
  std::int64_t index;
  std::reference_wrapper<const Fraction> fraction;
};

struct ConfigMeasure {
  std::uint64_t weak_size = 0;
  std::size_t best_offset = 0;
  /// Breakdown of the dominant (numerator or denominator) polynomial of
  /// each cell at best_offset.
  std::vector<std::pair<std::int64_t, WeakSizeBreakdown>> per_cell;
  std::uint64_t unit_size = 0;

  friend bool operator==(const ConfigMeasure&, const ConfigMeasure&) = default;
};

/// Sum of the cell weak sizes for every offset 0..n-1 (a single entry when n = 0).
std::vector<std::uint64_t> offset_sums(std::span<const CellRef> cells, std::size_t n);

/// Minimum of offset_sums, ties broken toward the smallest offset.
ConfigMeasure weak_size_configuration(std::span<const CellRef> cells, std::size_t n);

/// Min over offsets of a single fraction's weak size.
std::uint64_t weak_size_cell(const Fraction& f, std::size_t n);

enum class TransitionKind { Computation, Other };

/// Computation: max(deg g, deg h, heights of all coefficients of g and h).
/// Anything else costs 1. Throws UsageError when `result` presence does not
/// match the kind.
std::uint64_t weak_cost_transition(TransitionKind kind, const std::optional<Fraction>& result);

/// Cells holding 0 still count: a written cell is never empty again.
std::uint64_t unit_size(std::span<const CellRef> cells);

}  // namespace bsswm
