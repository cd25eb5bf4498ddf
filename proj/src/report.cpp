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

#include "bsswm/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace bsswm {

using nlohmann::ordered_json;

void to_json(ordered_json& j, const StepRow& s) {
  j = ordered_json{{"step", s.step},           {"node", s.node},           {"cost", s.cost},
                   {"weak_size", s.weak_size}, {"unit_size", s.unit_size}, {"best_offset", s.best_offset}};
}

void from_json(const ordered_json& j, StepRow& s) {
  j.at("step").get_to(s.step);
  j.at("node").get_to(s.node);
  j.at("cost").get_to(s.cost);
  j.at("weak_size").get_to(s.weak_size);
  j.at("unit_size").get_to(s.unit_size);
  j.at("best_offset").get_to(s.best_offset);
}

void to_json(ordered_json& j, const RunRecord& r) {
  j = ordered_json::object();
  j["input"] = r.input;
  j["status"] = r.status;
  if (r.error) j["error"] = *r.error;
  j["output"] = r.output;
  j["steps"] = r.steps;
  j["weak_time"] = r.weak_time;
  j["weak_space"] = r.weak_space;
  j["unit_space"] = r.unit_space;
  j["best_offset"] = r.best_offset;
  j["budget_verdict"] = r.budget_verdict ? ordered_json(*r.budget_verdict) : ordered_json(nullptr);
  if (!r.trace.empty()) j["trace"] = r.trace;
}

void from_json(const ordered_json& j, RunRecord& r) {
  j.at("input").get_to(r.input);
  j.at("status").get_to(r.status);
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  j.at("output").get_to(r.output);
  j.at("steps").get_to(r.steps);
  j.at("weak_time").get_to(r.weak_time);
  j.at("weak_space").get_to(r.weak_space);
  j.at("unit_space").get_to(r.unit_space);
  j.at("best_offset").get_to(r.best_offset);
  if (!j.at("budget_verdict").is_null()) r.budget_verdict = j.at("budget_verdict").get<bool>();
  if (j.contains("trace")) j.at("trace").get_to(r.trace);
}

RunRecord make_record(std::span<const Rational> input, const RunResult& r, std::optional<bool> budget_verdict) {
  RunRecord rec;
  for (const auto& v : input) rec.input.push_back(v.str());
  rec.status = std::string(to_string(r.status));
  if (r.error) rec.error = std::string(to_string(*r.error));
  for (const auto& v : r.output) rec.output.push_back(v.str());
  rec.steps = r.steps;
  rec.weak_time = r.weak_time;
  rec.weak_space = r.weak_space;
  rec.unit_space = r.unit_space;
  rec.best_offset = r.best_offset;
  rec.budget_verdict = budget_verdict;
  if (r.trace) {
    for (const auto& e : *r.trace)
      rec.trace.push_back({e.step, e.config.node, e.cost, e.measure.weak_size, e.measure.unit_size, e.measure.best_offset});
  }
  return rec;
}

std::string to_json(const ReportDocument& doc) {
  ordered_json j;
  j["machine"] = doc.machine;
  j["budget"] = doc.budget ? ordered_json(*doc.budget) : ordered_json(nullptr);
  j["runs"] = doc.runs;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view text) {
  try {
    ordered_json j = ordered_json::parse(text);
    ReportDocument doc;
    j.at("machine").get_to(doc.machine);
    if (!j.at("budget").is_null()) doc.budget = j.at("budget").get<std::string>();
    j.at("runs").get_to(doc.runs);
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 1, 1);
  }
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s;
}

}  // namespace

std::string to_table(const ReportDocument& doc) {
  std::ostringstream os;
  os << "machine: " << doc.machine << '\n';
  if (doc.budget) os << "budget: " << *doc.budget << '\n';
  os << std::left << std::setw(24) << "input" << std::setw(30) << "status" << std::right << std::setw(8) << "steps"
     << std::setw(11) << "weak_time" << std::setw(12) << "weak_space" << std::setw(12) << "unit_space" << std::setw(13)
     << "best_offset";
  if (doc.budget) os << std::setw(16) << "budget_verdict";
  os << '\n';
  for (const auto& r : doc.runs) {
    std::string status = r.status + (r.error ? "(" + *r.error + ")" : "");
    os << std::left << std::setw(24) << join(r.input) << std::setw(30) << status << std::right << std::setw(8)
       << r.steps << std::setw(11) << r.weak_time << std::setw(12) << r.weak_space << std::setw(12) << r.unit_space
       << std::setw(13) << r.best_offset;
    if (doc.budget) os << std::setw(16) << (r.budget_verdict ? (*r.budget_verdict ? "within" : "exceeded") : "-");
    os << '\n';
    if (!r.output.empty()) os << "  output: " << join(r.output) << '\n';
    if (!r.trace.empty()) {
      os << "  " << std::setw(6) << "step" << std::setw(6) << "node" << std::setw(6) << "cost" << std::setw(8) << "Size_w"
         << std::setw(6) << "unit" << std::setw(8) << "offset" << '\n';
      for (const auto& s : r.trace)
        os << "  " << std::setw(6) << s.step << std::setw(6) << s.node << std::setw(6) << s.cost << std::setw(8)
           << s.weak_size << std::setw(6) << s.unit_size << std::setw(8) << s.best_offset << '\n';
    }
  }
  return os.str();
}

}  // namespace bsswm
