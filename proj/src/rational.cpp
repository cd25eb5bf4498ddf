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

#include "bsswm/rational.hpp"

#include <cctype>
#include <ostream>

#include "bsswm/errors.hpp"

namespace bsswm {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string_view to_string(RuntimeErrorKind kind) noexcept {
  switch (kind) {
    case RuntimeErrorKind::ReadEmptyCell:
      return "ReadEmptyCell";
    case RuntimeErrorKind::InputExhausted:
      return "InputExhausted";
    case RuntimeErrorKind::ConcreteDivisionByZero:
      return "ConcreteDivisionByZero";
    case RuntimeErrorKind::SymbolicDivisionByZero:
      return "SymbolicDivisionByZero";
  }
  return "Unknown";
}

ComputationError::ComputationError(RuntimeErrorKind kind, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(to_string(kind))
                                        : std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw ComputationError(RuntimeErrorKind::ConcreteDivisionByZero, "zero denominator");
  value_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ComputationError(RuntimeErrorKind::ConcreteDivisionByZero);
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned long exponent) const {
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return r;
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  // the denominator carries no sign of its own
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::vector<Rational> parse_rational_vector(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational_vector(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += values[i].str();
  }
  return s;
}

unsigned long bit_length(const Integer& c) {
  if (c == 0) return 0;
  return mpz_sizeinbase(c.get_mpz_t(), 2);
}

unsigned long bit_length(unsigned long long c) {
  unsigned long bits = 0;
  while (c) {
    ++bits;
    c >>= 1;
  }
  return bits;
}

}  // namespace bsswm
