// Copyright 2026 The hornlin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "test_util.hpp"

namespace hornlin {
namespace {

namespace fs = std::filesystem;
using testing::corpus;
using testing::read_file;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hornlin-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with `args`, capturing stdout into `out` when given.
  int run(const std::string& args, std::string* out = nullptr) {
    std::string stdout_path = (dir_ / "stdout.txt").string();
    std::string cmd = std::string(HORNLIN_CLI) + " " + args + " > " + stdout_path + " 2> " +
                      (dir_ / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    if (out) *out = read_file(stdout_path);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kFibImp = corpus("programs/fibonacci.imp");
const std::string kFibSpec = corpus("specs/fibonacci.spec");

TEST_F(CliTest, PipelineWritesScriptAndSummary) {
  std::string out;
  ASSERT_EQ(run("pipeline " + kFibImp + " " + kFibSpec + " --out " + path("fib.smt2"), &out), 0);
  EXPECT_NE(read_file(path("fib.smt2")).find("(set-logic HORN)"), std::string::npos);
  EXPECT_NE(out.find("lin: 23 clauses"), std::string::npos);
  EXPECT_NE(out.find("3 definitions"), std::string::npos);
}

TEST_F(CliTest, PipelineEqualsManualComposition) {
  ASSERT_EQ(run("pipeline " + kFibImp + " " + kFibSpec + " -o " + path("p.smt2")), 0);
  ASSERT_EQ(run("encode " + kFibImp + " " + kFibSpec + " -o " + path("pc.chc")), 0);
  ASSERT_EQ(run("ri " + path("pc.chc") + " -o " + path("ri.chc")), 0);
  ASSERT_EQ(run("lin " + path("ri.chc") + " -o " + path("lin.chc")), 0);
  ASSERT_EQ(run("emit " + path("lin.chc") + " -o " + path("m.smt2")), 0);
  EXPECT_EQ(read_file(path("p.smt2")), read_file(path("m.smt2")));
}

TEST_F(CliTest, OutputIsDeterministic) {
  std::string a, b;
  ASSERT_EQ(run("pipeline " + kFibImp + " " + kFibSpec + " --trace " + path("t1"), &a), 0);
  ASSERT_EQ(run("pipeline " + kFibImp + " " + kFibSpec + " --trace " + path("t2"), &b), 0);
  EXPECT_EQ(a, b);
  EXPECT_EQ(read_file(path("t1")), read_file(path("t2")));
}

TEST_F(CliTest, CheckReportsNoCounterexample) {
  ASSERT_EQ(run("encode " + kFibImp + " " + kFibSpec + " -o " + path("fib.chc")), 0);
  std::string out;
  EXPECT_EQ(run("check " + path("fib.chc") + " --depth 8", &out), 0);
  EXPECT_NE(out.find("no counterexample up to depth 8"), std::string::npos);
}

TEST_F(CliTest, CheckReportsCounterexampleAndBudget) {
  ASSERT_EQ(run("encode " + kFibImp + " " + corpus("mutants/fibonacci_m1.spec") + " -o " +
                path("m.chc")),
            0);
  EXPECT_EQ(run("check " + path("m.chc")), 1);
  EXPECT_EQ(run("check " + path("m.chc") + " --budget 3"), 3);
}

TEST_F(CliTest, CheckManyFilesInParallel) {
  std::string out;
  EXPECT_EQ(run("check --jobs 3 --json " + corpus("chc/doubling.chc") + " " +
                    corpus("chc/counters.chc") + " " + corpus("chc/triangular.chc"),
                &out),
            0);
  EXPECT_NE(out.find("\"results\""), std::string::npos);
}

TEST_F(CliTest, VerifyExitCodes) {
  EXPECT_EQ(run("verify " + corpus("chc/doubling.chc") + " " + corpus("chc/doubling.sigma")), 0);
  EXPECT_EQ(run("verify " + corpus("chc/doubling.chc") + " " + corpus("chc/doubling_weak.sigma")), 1);
}

TEST_F(CliTest, JsonSummaryKeys) {
  std::string out;
  ASSERT_EQ(run("lin --json " + corpus("chc/counters.chc") + " -o " + path("c.chc"), &out), 0);
  for (const char* key : {"\"stage\"", "\"clauses\"", "\"goals\"", "\"max_body_width\"",
                          "\"definitions\"", "\"max_goal_atoms\"", "\"max_definition_atoms\""}) {
    EXPECT_NE(out.find(key), std::string::npos) << key;
  }
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run("encode missing.imp missing.spec"), 2);
  EXPECT_EQ(run("nosuchcommand"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("check " + kFibImp), 2);
}

TEST_F(CliTest, SolverErrorsExitThree) {
  ASSERT_EQ(run("encode " + kFibImp + " " + kFibSpec + " -o " + path("fib.chc")), 0);
  EXPECT_EQ(run("emit " + path("fib.chc") + " --solver /nonexistent/solver -o " + path("x")), 3);
  EXPECT_EQ(run("emit " + path("fib.chc") + " --solver true --timeout 0 -o " + path("x")), 3);
  EXPECT_EQ(run("emit " + path("fib.chc") + " --solver 'echo unsat' -o " + path("x")), 1);
}

}  // namespace
}  // namespace hornlin
