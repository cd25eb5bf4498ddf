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

#include "bsswm/measures.hpp"

#include <algorithm>

#include "bsswm/errors.hpp"

namespace bsswm {

std::uint64_t height(const Integer& c) { return bit_length(c); }

std::uint64_t breakdown_total(const WeakSizeBreakdown& b) { return b.terms * (b.s_bits + b.v * b.r_bits + b.v * b.d_bits); }

namespace {

// Offset-independent part of a polynomial's weak size.
struct Profile {
  std::uint64_t terms = 0;
  std::uint64_t s_bits = 0;
  std::uint64_t d_bits = 0;
  std::uint64_t v = 0;
  std::vector<std::size_t> vars;  // 1-based input indexes
};

Profile profile(const Polynomial& g) {
  Profile p;
  if (g.is_zero()) return p;
  PolyStats st = poly_stats(g);
  EffectiveVars ev = effective_vars(g);
  p.terms = st.terms;
  p.s_bits = bit_length(Integer(2 * st.max_abs_coefficient));
  p.d_bits = bit_length(static_cast<unsigned long long>(st.degree));
  p.v = ev.per_monomial;
  p.vars.assign(ev.vars.begin(), ev.vars.end());
  return p;
}

WeakSizeBreakdown at_offset(const Profile& p, std::size_t offset, std::size_t n) {
  WeakSizeBreakdown b;
  b.terms = p.terms;
  b.s_bits = p.s_bits;
  b.d_bits = p.d_bits;
  b.v = p.v;
  b.offset = offset;
  for (std::size_t i : p.vars) b.range_raw = std::max<std::uint64_t>(b.range_raw, (i + offset) % n);
  b.r_bits = bit_length(static_cast<unsigned long long>(b.range_raw));
  b.total = breakdown_total(b);
  return b;
}

void check_offset(std::size_t offset, std::size_t n) {
  if (n == 0 ? offset != 0 : offset >= n) throw UsageError("offset must lie in [0, n)");
}

std::size_t offset_count(std::size_t n) { return n == 0 ? 1 : n; }

}  // namespace

WeakSizeBreakdown weak_size_poly(const Polynomial& g, std::size_t offset, std::size_t n) {
  check_offset(offset, n);
  if (g.arity().inputs != n) throw UsageError("polynomial input arity differs from n");
  return at_offset(profile(g), offset, n);
}

std::uint64_t weak_size_fraction(const Fraction& f, std::size_t offset, std::size_t n) {
  if (f.is_zero()) return weak_size_poly(f.num(), offset, n).total;
  return std::max(weak_size_poly(f.num(), offset, n).total, weak_size_poly(f.den(), offset, n).total);
}

namespace {

struct CellProfile {
  std::int64_t index;
  Profile num;
  Profile den;
};

std::vector<CellProfile> profiles(std::span<const CellRef> cells, std::size_t n) {
  std::vector<CellProfile> out;
  out.reserve(cells.size());
  for (const CellRef& c : cells) {
    const Fraction& f = c.fraction.get();
    if (f.arity().inputs != n) throw UsageError("cell fraction input arity differs from n");
    out.push_back({c.index, profile(f.num()), profile(f.is_zero() ? f.num() : f.den())});
  }
  return out;
}

std::uint64_t cell_size(const CellProfile& c, std::size_t offset, std::size_t n) {
  return std::max(at_offset(c.num, offset, n).total, at_offset(c.den, offset, n).total);
}

}  // namespace

std::vector<std::uint64_t> offset_sums(std::span<const CellRef> cells, std::size_t n) {
  auto prof = profiles(cells, n);
  std::vector<std::uint64_t> sums(offset_count(n), 0);
  for (std::size_t o = 0; o < sums.size(); ++o)
    for (const auto& c : prof) sums[o] += cell_size(c, o, n);
  return sums;
}

ConfigMeasure weak_size_configuration(std::span<const CellRef> cells, std::size_t n) {
  auto prof = profiles(cells, n);
  ConfigMeasure m;
  m.unit_size = cells.size();
  bool first = true;
  for (std::size_t o = 0; o < offset_count(n); ++o) {
    std::uint64_t sum = 0;
    for (const auto& c : prof) sum += cell_size(c, o, n);
    if (first || sum < m.weak_size) {
      m.weak_size = sum;
      m.best_offset = o;
      first = false;
    }
  }
  for (const auto& c : prof) {
    auto num = at_offset(c.num, m.best_offset, n);
    auto den = at_offset(c.den, m.best_offset, n);
    m.per_cell.emplace_back(c.index, den.total > num.total ? den : num);
  }
  return m;
}

std::uint64_t weak_size_cell(const Fraction& f, std::size_t n) {
  CellRef ref{0, std::cref(f)};
  return weak_size_configuration(std::span<const CellRef>(&ref, 1), n).weak_size;
}

std::uint64_t weak_cost_transition(TransitionKind kind, const std::optional<Fraction>& result) {
  if ((kind == TransitionKind::Computation) != result.has_value())
    throw UsageError("a computed fraction is required exactly for computation transitions");
  if (kind == TransitionKind::Other) return 1;
  const Fraction& f = *result;
  std::uint64_t cost = std::max(f.num().total_degree(), f.den().total_degree());
  for (const Polynomial* p : {&f.num(), &f.den()})
    for (const auto& [m, c] : p->terms()) cost = std::max(cost, height(c));
  return cost;
}

std::uint64_t unit_size(std::span<const CellRef> cells) { return cells.size(); }

}  // namespace bsswm
