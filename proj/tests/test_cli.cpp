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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsswm/cli.hpp"
#include "bsswm/report.hpp"
#include "support.hpp"

using namespace bsswm;
using testing::corpus_path;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "bsswm");
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string machine(const char* name) { return corpus_path(std::string(name) + ".bssm"); }

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("bsswm_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("run examples") {
  auto r = call({"run", machine("sumge0"), "--input", "1/2,-1/3", "--format", "json"});
  CHECK(r.code == kExitOk);
  ReportDocument doc = report_from_json(r.out);
  REQUIRE(doc.runs.size() == 1);
  CHECK(doc.machine == "sumge0");
  CHECK(doc.runs[0].status == "Accepted");
  CHECK(doc.runs[0].weak_space == 11);
  CHECK(doc.runs[0].steps == 10);
  CHECK(doc.runs[0].trace.empty());

  auto t = call({"run", machine("sumge0"), "--input", "1/2,-1/3"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("Accepted") != std::string::npos);

  auto rej = call({"run", machine("sumge0"), "--input", "-1,-1"});
  CHECK(rej.code == kExitReject);

  auto few = call({"run", machine("sumge0"), "--input", "1", "--format", "json"});
  CHECK(few.code == kExitRuntime);
  CHECK(report_from_json(few.out).runs[0].error == "InputExhausted");

  auto limit = call({"run", machine("loop_right"), "--input", "", "--max-steps", "7", "--format", "json"});
  CHECK(limit.code == kExitRuntime);
  CHECK(report_from_json(limit.out).runs[0].steps == 7);

  auto traced = call({"run", machine("sumge0"), "--input", "1/2,-1/3", "--trace", "--format", "json"});
  auto rows = report_from_json(traced.out).runs[0].trace;
  REQUIRE(rows.size() == 11);
  CHECK(rows.back().weak_size <= 11);
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.cost;
  CHECK(total == 10);
}

TEST_CASE("eval examples") {
  auto r = call({"eval", corpus_path("sq2.acir"), "--input", "1"});
  CHECK(r.code == kExitReject);
  CHECK(r.out.find("decision: 0") != std::string::npos);
  auto a = call({"eval", corpus_path("sq2.acir"), "--input", "2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "output: 1\ndecision: 1\n");
}

TEST_CASE("usage errors") {
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"run", machine("sumge0"), "--input", "1,2", "--bogus"}).code == kExitUsage);
  CHECK(call({"run", machine("sumge0")}).code == kExitUsage);
  CHECK(call({"run", machine("sumge0"), "--input", "1,x"}).code == kExitUsage);
  CHECK(call({"run", machine("sumge0"), "--input", "1,2", "--format", "xml"}).code == kExitUsage);
  CHECK(call({"run", "/nonexistent/m.bssm", "--input", "1"}).code == kExitUsage);
  CHECK(call({}).code == kExitUsage);
  auto bad = call({"frobnicate"});
  CHECK(bad.err.find("Subcommands") != std::string::npos);
  CHECK(call({"run", machine("sumge0"), "--bogus"}).err.find("--max-steps") != std::string::npos);
  TempDir dir;
  auto broken = dir.file("broken.bssm", "machine b\nnodes:\n  0: start -> 1\n  1: jump -> 0\n");
  auto e = call({"run", broken, "--input", "1"});
  CHECK(e.code == kExitUsage);
  CHECK(e.err.find(":4:6: unknown node kind") != std::string::npos);
}

TEST_CASE("profile reports") {
  TempDir dir;
  auto inputs = dir.file("inputs.txt", "1/2,-1/3\n-1,-1\n0,0\n1\n");
  auto r = call({"profile", machine("sumge0"), "--inputs", inputs, "--budget", "log:40", "--format", "json"});
  CHECK(r.code == kExitOk);
  ReportDocument doc = report_from_json(r.out);
  CHECK(doc.budget == "log:40");
  REQUIRE(doc.runs.size() == 4);
  CHECK(doc.runs[0].status == "Accepted");
  CHECK(doc.runs[1].status == "Rejected");
  CHECK(doc.runs[2].status == "Accepted");
  CHECK(doc.runs[3].error == "InputExhausted");
  for (std::size_t i = 0; i < 3; ++i) CHECK(doc.runs[i].budget_verdict.has_value());
  CHECK_FALSE(doc.runs[3].budget_verdict.has_value());
  CHECK(doc.runs[0].budget_verdict == true);
  CHECK(to_json(doc) == r.out);

  auto tight = call({"profile", machine("sumge0"), "--inputs", inputs, "--budget", "const:2", "--format", "json"});
  CHECK(report_from_json(tight.out).runs[0].budget_verdict == false);

  auto table = call({"profile", machine("sumge0"), "--inputs", inputs});
  CHECK(table.code == kExitOk);
  for (const char* field : {"status", "steps", "weak_time", "weak_space", "unit_space", "best_offset"})
    CHECK(table.out.find(field) != std::string::npos);

  CHECK(call({"profile", machine("sumge0"), "--inputs", inputs, "--budget", "cubic:3"}).code == kExitUsage);
  CHECK(call({"profile", machine("sumge0"), "--inputs", dir.path("missing.txt")}).code == kExitUsage);
}

TEST_CASE("reports are deterministic and round trip") {
  TempDir dir;
  auto inputs = dir.file("inputs.txt", "1/2,-1/3\n3/7,-5/11\n-2,1\n");
  for (const char* name : {"sumge0", "between", "ratio", "diffsq"}) {
    std::vector<std::string> args{"profile", machine(name), "--inputs", inputs, "--budget", "poly:3,2", "--format", "json"};
    auto a = call(args), b = call(args);
    CHECK(a.out == b.out);
    CHECK(to_json(report_from_json(a.out)) == a.out);
    auto ta = call({"profile", machine(name), "--inputs", inputs}), tb = call({"profile", machine(name), "--inputs", inputs});
    CHECK(ta.out == tb.out);
  }
  CHECK(call({"run", machine("sumge0"), "--input", "1/2,-1/3", "--format", "json"}).out.find('.') == std::string::npos);
  CHECK_THROWS_AS(report_from_json("{\"machine\": 3}"), ParseError);
  CHECK_THROWS_AS(report_from_json("not json"), ParseError);
}

TEST_CASE("compile and verify") {
  TempDir dir;
  auto circuit = dir.path("sumge0.acir");
  auto c = call({"compile", machine("sumge0"), "-n", "2", "-T", "16", "-W", "4", "-o", circuit});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("gates: ") != std::string::npos);
  CHECK(std::filesystem::exists(circuit));

  auto samples = dir.file("samples.txt", "1/2,-1/3\n-1,-1\n0,0\n5,-6\n");
  auto v = call({"verify", machine("sumge0"), circuit, "--samples", samples});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("agreement: 4/4") != std::string::npos);

  auto e = call({"eval", circuit, "--input", "1/2,-1/3"});
  CHECK(e.code == kExitOk);

  auto other = dir.path("between.acir");
  CHECK(call({"compile", machine("between"), "-n", "2", "-T", "14", "-W", "3", "-o", other}).code == kExitOk);
  auto wrong = call({"verify", machine("sumge0"), other, "--samples", samples});
  CHECK(wrong.code == kExitReject);
  CHECK(wrong.out.find("mismatch at sample") != std::string::npos);

  CHECK(call({"compile", machine("const5"), "-n", "1", "-T", "4", "-W", "1", "-o", dir.path("x.acir")}).code ==
        kExitUsage);
  CHECK(call({"compile", machine("sumge0"), "-n", "0", "-T", "4", "-W", "1", "-o", dir.path("y.acir")}).code ==
        kExitUsage);
}

TEST_CASE("explore and paths") {
  TempDir dir;
  auto dot = dir.path("g.dot");
  auto r = call({"explore", machine("sumge0"), "--input", "1/2,-1/3", "--dot", dot});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("classification: HaltAccept") != std::string::npos);
  CHECK(r.out.find("vertices: 11") != std::string::npos);
  std::string text = testing::read_file(dot);
  CHECK(text.rfind("digraph configurations {", 0) == 0);

  auto l = call({"explore", machine("oscillate"), "--input", ""});
  CHECK(l.out.find("Lasso (prefix 1, cycle 2)") != std::string::npos);

  auto p = call({"paths", machine("sumge0"), "-n", "2", "--depth", "20"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("paths: 2") != std::string::npos);
  CHECK(p.out.find("X1 + X2 >= 0") != std::string::npos);
  CHECK(p.out.find("X1 + X2 < 0") != std::string::npos);
}
