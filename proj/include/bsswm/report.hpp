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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsswm/machine.hpp"

namespace bsswm {

struct StepRow {
  std::uint64_t step = 0;
  std::size_t node = 0;
  std::uint64_t cost = 0;
  std::uint64_t weak_size = 0;
  std::uint64_t unit_size = 0;
  std::size_t best_offset = 0;
  friend bool operator==(const StepRow&, const StepRow&) = default;
};

/// One run. Rationals are kept as `p/q` text so the document never holds a
/// floating-point number.
struct RunRecord {
  std::vector<std::string> input;
  std::string status;
  std::optional<std::string> error;
  std::vector<std::string> output;
  std::uint64_t steps = 0;
  std::uint64_t weak_time = 0;
  std::uint64_t weak_space = 0;
  std::uint64_t unit_space = 0;
  std::size_t best_offset = 0;
  std::optional<bool> budget_verdict;
  std::vector<StepRow> trace;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct ReportDocument {
  std::string machine;
  std::optional<std::string> budget;
  std::vector<RunRecord> runs;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

RunRecord make_record(std::span<const Rational> input, const RunResult& r, std::optional<bool> budget_verdict = {});

std::string to_json(const ReportDocument& doc);
/// Throws ParseError on malformed or incomplete documents.
ReportDocument report_from_json(std::string_view text);
std::string to_table(const ReportDocument& doc);

}  // namespace bsswm
