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

#include "bsswm/machine.hpp"

// Parametric machine families used by the profiler demos and test suites.
namespace bsswm::corpus {

enum class SumTail {
  AcceptNonNegative,  // accept iff x1 + ... + xn >= 0
  AcceptZero,         // accept iff x1 + ... + xn = 0
  Output,             // output the sum and halt
};

/// Straight-line summation of n inputs into work cell 0, using cells 0 and 1
/// only, followed by the chosen tail.
Machine summation(std::size_t n, SumTail tail);

/// Reads x1 and squares it k times (copy + multiply), leaving x1^(2^k) in cell 0.
Machine repeated_squaring(std::size_t k);

}  // namespace bsswm::corpus
