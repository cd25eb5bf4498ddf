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

#include "bsswm/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "bsswm/compiler.hpp"
#include "bsswm/exploration.hpp"
#include "bsswm/report.hpp"

namespace bsswm {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o || !(o << text)) throw UsageError("cannot write '" + path + "'");
}

Machine load_machine(const std::string& path) {
  try {
    return parse_machine(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

Circuit load_circuit(const std::string& path) {
  try {
    return parse_circuit(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

std::vector<Rational> parse_vector_arg(const std::string& text) {
  try {
    return parse_rational_vector(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad input vector: ") + e.what());
  }
}

// One comma-separated vector per non-blank line; `#` starts a comment.
std::vector<std::vector<Rational>> load_vectors(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<std::vector<Rational>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    try {
      out.push_back(parse_rational_vector(line));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

int status_exit(RunStatus s) {
  switch (s) {
    case RunStatus::Accepted:
    case RunStatus::HaltedPlain:
      return kExitOk;
    case RunStatus::Rejected:
      return kExitReject;
    default:
      return kExitRuntime;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and weak-space profiler for real-number machines and algebraic circuits", "bsswm"};
  app.require_subcommand(1);

  std::string machine_path, circuit_path, input_text, inputs_path, samples_path, out_path, dot_path, budget_text;
  std::string format = "table";
  std::uint64_t max_steps = RunLimits{}.max_steps;
  std::size_t n = 0, steps = 0, width = 0, depth = 0;
  bool trace = false;
  const std::vector<std::string> formats{"table", "json"};

  auto* run_cmd = app.add_subcommand("run", "Run a machine on one input");
  run_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  run_cmd->add_option("--input", input_text, "Comma-separated rationals, e.g. 1/2,-1/3")->required();
  run_cmd->add_option("--max-steps", max_steps, "Step limit")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--trace", trace, "Include the per-step table");
  run_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember(formats));

  auto* profile_cmd = app.add_subcommand("profile", "Run a machine on every vector of a file");
  profile_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  profile_cmd->add_option("--inputs", inputs_path, "One input vector per line")->required();
  profile_cmd->add_option("--budget", budget_text, "log:K, poly:K,D or const:M");
  profile_cmd->add_option("--max-steps", max_steps, "Step limit per run")->check(CLI::PositiveNumber);
  profile_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember(formats));

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an algebraic circuit");
  eval_cmd->add_option("circuit", circuit_path, "Circuit file (.acir)")->required();
  eval_cmd->add_option("--input", input_text, "Comma-separated rationals")->required();

  auto* compile_cmd = app.add_subcommand("compile", "Compile a decision machine to a circuit");
  compile_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  compile_cmd->add_option("-n", n, "Input count")->required()->check(CLI::PositiveNumber);
  compile_cmd->add_option("-T", steps, "Simulated steps")->required()->check(CLI::PositiveNumber);
  compile_cmd->add_option("-W", width, "Work-tape half width")->required()->check(CLI::PositiveNumber);
  compile_cmd->add_option("-o", out_path, "Output circuit file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Compare a compiled circuit with its machine");
  verify_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  verify_cmd->add_option("circuit", circuit_path, "Circuit file (.acir)")->required();
  verify_cmd->add_option("--samples", samples_path, "One input vector per line")->required();

  auto* explore_cmd = app.add_subcommand("explore", "Build the run-reachable configuration graph");
  explore_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  explore_cmd->add_option("--input", input_text, "Comma-separated rationals")->required();
  explore_cmd->add_option("--max-steps", max_steps, "Step limit")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--dot", dot_path, "Write the graph in DOT format");

  auto* paths_cmd = app.add_subcommand("paths", "Enumerate symbolic path conditions");
  paths_cmd->add_option("machine", machine_path, "Machine file (.bssm)")->required();
  paths_cmd->add_option("-n", n, "Input count")->required();
  paths_cmd->add_option("--depth", depth, "Step bound per path")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    const CLI::App* scope = &app;
    for (const auto* sub : app.get_subcommands()) scope = sub;
    err << scope->help();
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      auto x = parse_vector_arg(input_text);
      RunLimits limits;
      limits.max_steps = max_steps;
      RunResult r = run(m, x, limits, trace);
      ReportDocument doc{m.name, std::nullopt, {make_record(x, r)}};
      out << (format == "json" ? to_json(doc) : to_table(doc));
      return status_exit(r.status);
    }
    if (profile_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      auto inputs = load_vectors(inputs_path);
      std::optional<Budget> budget;
      if (!budget_text.empty()) budget = parse_budget(budget_text);
      RunLimits limits;
      limits.max_steps = max_steps;
      ReportDocument doc{m.name, budget ? std::optional(format_budget(*budget)) : std::nullopt, {}};
      for (const auto& x : inputs) {
        RunResult r = run(m, x, limits);
        std::optional<bool> verdict;
        if (budget && budget_applies(*budget, x.size())) verdict = check_budget(r, x.size(), *budget);
        doc.runs.push_back(make_record(x, r, verdict));
      }
      out << (format == "json" ? to_json(doc) : to_table(doc));
      return kExitOk;
    }
    if (eval_cmd->parsed()) {
      Circuit c = load_circuit(circuit_path);
      auto x = parse_vector_arg(input_text);
      auto values = eval_circuit(c, x);
      if (values.empty()) throw UsageError("empty circuit");
      out << "output: " << values.back() << '\n';
      if (!c.is_decision()) return kExitOk;
      bool bit = !values.back().is_zero();
      out << "decision: " << (bit ? 1 : 0) << '\n';
      return bit ? kExitOk : kExitReject;
    }
    if (compile_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      CompileBounds b{n, steps, width};
      Circuit c = compile_machine(m, b);
      spill(out_path, compiled_circuit_text(m, b, c));
      auto stats = circuit_stats(c);
      out << "gates: " << stats.size << "\ndepth: " << stats.depth << "\nsize bound: " << compiled_size_bound(m, b)
          << '\n';
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      Circuit c = load_circuit(circuit_path);
      auto samples = load_vectors(samples_path);
      VerifyReport rep = verify_compilation(m, c, samples);
      out << "agreement: " << rep.matched << "/" << rep.samples << '\n';
      for (const auto& mm : rep.mismatches)
        out << "mismatch at sample " << mm.sample + 1 << " (" << format_rational_vector(mm.input)
            << "): circuit " << mm.circuit << ", machine " << mm.machine << '\n';
      return rep.ok() ? kExitOk : kExitReject;
    }
    if (explore_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      auto x = parse_vector_arg(input_text);
      RunLimits limits;
      limits.max_steps = max_steps;
      ConfigGraph g = reachable_graph(m, x, limits);
      out << "classification: " << to_string(g.classification);
      if (g.classification == GraphClass::Lasso)
        out << " (prefix " << g.lasso_prefix << ", cycle " << g.lasso_cycle << ")";
      if (g.error) out << " (" << to_string(*g.error) << ")";
      out << "\nvertices: " << g.vertices.size() << "\nedges: " << g.edges.size() << '\n';
      if (!dot_path.empty()) spill(dot_path, export_dot(g));
      switch (g.classification) {
        case GraphClass::HaltReject:
          return kExitReject;
        case GraphClass::RuntimeError:
        case GraphClass::BudgetExceeded:
          return kExitRuntime;
        default:
          return kExitOk;
      }
    }
    if (paths_cmd->parsed()) {
      Machine m = load_machine(machine_path);
      auto paths = symbolic_paths(m, n, depth);
      out << "paths: " << paths.size() << '\n';
      for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        out << "path " << i + 1 << ": " << to_string(p.verdict);
        if (p.error) out << " (" << to_string(*p.error) << ")";
        out << " after " << p.trace_length << " steps\n";
        for (const auto& lit : p.literals) out << "  " << lit.poly.str() << ' ' << to_string(lit.rel) << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ComputationError& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bsswm
