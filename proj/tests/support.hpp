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

// Shared helpers for the test binaries: seeded generators and corpus access.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bsswm/fraction.hpp"
#include "bsswm/machine.hpp"
#include "bsswm/polynomial.hpp"
#include "bsswm/rational.hpp"

namespace testing {

using namespace bsswm;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Numerator in [-20, 20], denominator in [1, 10].
  Rational rational() { return Rational(Integer(uniform(-20, 20)), Integer(uniform(1, 10))); }
  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
  std::vector<Rational> vec(std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  Polynomial poly(Arity a, std::size_t max_terms = 4, unsigned max_exp = 2, long coef = 9) {
    Polynomial::TermMap t;
    std::size_t terms = static_cast<std::size_t>(uniform(0, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      std::vector<unsigned> e(a.total());
      for (auto& x : e) x = static_cast<unsigned>(uniform(0, max_exp));
      t[Monomial(e)] += uniform(-coef, coef);
    }
    return Polynomial(a, std::move(t));
  }
  Polynomial nonzero_poly(Arity a, std::size_t max_terms = 3, unsigned max_exp = 2, long coef = 9) {
    for (;;) {
      Polynomial p = poly(a, max_terms, max_exp, coef);
      if (!p.is_zero()) return p;
    }
  }
  Fraction fraction(Arity a) { return Fraction(poly(a, 3, 2, 6), nonzero_poly(a, 2, 1, 4)); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline std::string corpus_path(const std::string& name) { return std::string(BSSWM_CORPUS_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Machine corpus_machine(const std::string& name) { return parse_machine(read_file(corpus_path(name + ".bssm"))); }

// Weak-size oracle written straight from the definition, independent of
// the library's cached per-polynomial statistics.
// Smallest b with 2^b >= v + 1, found by doubling.
inline std::uint64_t ceil_log2_plus1(const Integer& v) {
  Integer bound = 1;
  std::uint64_t b = 0;
  while (bound < v + 1) {
    bound *= 2;
    ++b;
  }
  return b;
}

// Direct transcription of the weak size of one polynomial at one offset.
inline std::uint64_t oracle_poly(const Polynomial& g, std::size_t offset, std::size_t n) {
  std::uint64_t N = 0, deg = 0, V = 0, R = 0;
  Integer smax = 0;
  for (const auto& [m, c] : g.terms()) {
    ++N;
    Integer a = abs(c);
    if (a > smax) smax = a;
    std::uint64_t d = 0, vars = 0;
    for (std::size_t s = 0; s < m.exponents.size(); ++s) {
      d += m.exponents[s];
      if (s < n && m.exponents[s] > 0) {
        ++vars;
        R = std::max<std::uint64_t>(R, (s + 1 + offset) % n);
      }
    }
    deg = std::max(deg, d);
    V = std::max(V, vars);
  }
  if (N == 0) return 0;
  std::uint64_t S = ceil_log2_plus1(2 * smax), D = ceil_log2_plus1(deg), Rb = ceil_log2_plus1(R);
  return N * (S + V * Rb + V * D);
}

inline std::uint64_t oracle_fraction(const Fraction& f, std::size_t offset, std::size_t n) {
  if (f.is_zero()) return 0;
  return std::max(oracle_poly(f.num(), offset, n), oracle_poly(f.den(), offset, n));
}

inline std::uint64_t oracle_config(const std::vector<Fraction>& cells, std::size_t n) {
  std::uint64_t best = UINT64_MAX;
  for (std::size_t o = 0; o < std::max<std::size_t>(n, 1); ++o) {
    std::uint64_t s = 0;
    for (const auto& f : cells) s += oracle_fraction(f, o, n);
    best = std::min(best, s);
  }
  return best;
}

}  // namespace testing
