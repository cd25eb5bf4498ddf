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
#include <stdexcept>
#include <string>
#include <string_view>

namespace bsswm {

/// Caller violated an operation's precondition (arity mismatch, bad offset, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class RuntimeErrorKind {
  ReadEmptyCell,
  InputExhausted,
  ConcreteDivisionByZero,
  SymbolicDivisionByZero,
};

std::string_view to_string(RuntimeErrorKind kind) noexcept;

/// Failure of an exact computation: a division by zero (concrete or
/// symbolic) or an illegal tape access.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(RuntimeErrorKind kind, const std::string& detail = {});

  RuntimeErrorKind kind() const noexcept { return kind_; }

 private:
  RuntimeErrorKind kind_;
};

}  // namespace bsswm
