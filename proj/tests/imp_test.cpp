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

#include <algorithm>

#include "hornlin/errors.hpp"
#include "hornlin/imp.hpp"
#include "test_util.hpp"

namespace hornlin {
namespace {

using testing::load_program;

Int run_var(const ImpProgram& p, const IntEnv& init, const Var& out) {
  InterpResult r = interpret(p, init);
  EXPECT_TRUE(r.halted);
  return r.env.at(out);
}

TEST(ImpTest, FibonacciNormalizesToSevenCommands) {
  ImpProgram p = load_program("fibonacci");
  EXPECT_EQ(p.commands.size(), 7u);
  EXPECT_EQ(p.halt_index(), 6u);
  EXPECT_EQ(p.label_of(6), "h");
  EXPECT_EQ(p.variables, (std::vector<Var>{"n", "t", "u", "v"}));
}

TEST(ImpTest, FibonacciLoopHead) {
  ImpProgram p = load_program("fibonacci");
  auto heads = loop_heads(p);
  EXPECT_NE(std::find(heads.begin(), heads.end(), 0u), heads.end());
}

TEST(ImpTest, InterpretFibonacci) {
  ImpProgram p = load_program("fibonacci");
  const int expected[] = {1, 1, 2, 3, 5, 8, 13, 21};
  for (int n = 0; n < 8; ++n) {
    EXPECT_EQ(run_var(p, {{"n", n}, {"u", 1}, {"v", 0}, {"t", 0}}, "u"), expected[n]) << n;
  }
}

TEST(ImpTest, InterpretCorpusPrograms) {
  EXPECT_EQ(run_var(load_program("gcd"), {{"a", 12}, {"b", 18}}, "a"), 6);
  EXPECT_EQ(run_var(load_program("integer_division"), {{"a", 17}, {"b", 5}, {"q", 0}}, "q"), 3);
  EXPECT_EQ(run_var(load_program("remainder"), {{"a", 17}, {"b", 5}}, "a"), 2);
  EXPECT_EQ(run_var(load_program("sum_first_integers"), {{"n", 4}, {"i", 0}, {"s", 0}}, "s"), 10);
  EXPECT_EQ(run_var(load_program("integer_multiplication"), {{"x", 3}, {"y", -4}, {"z", 0}}, "z"), -12);
  EXPECT_EQ(run_var(load_program("hanoi"), {{"n", 5}, {"m", 0}}, "m"), 31);
  EXPECT_EQ(run_var(load_program("lucas"), {{"n", 5}}, "u"), 11);
  EXPECT_EQ(run_var(load_program("padovan"), {{"n", 7}, {"a", 1}, {"b", 1}, {"c", 1}}, "a"), 5);
  EXPECT_EQ(run_var(load_program("perrin"), {{"n", 7}, {"a", 3}, {"b", 0}, {"c", 2}}, "a"), 7);
}

TEST(ImpTest, NonTerminationRunsOutOfFuel) {
  ImpProgram p = normalize_jumps(parse_imp("0: while (x >= 0) { x = x + 1 }\nh: halt\n"));
  InterpResult r = interpret(p, {{"x", 0}}, 1000);
  EXPECT_FALSE(r.halted);
}

TEST(ImpTest, GotoFormsAreAccepted) {
  ImpProgram p = normalize_jumps(parse_imp(
      "0: if (x > 0) goto 1 else goto h\n1: x = x - 1\ngoto 0\nh: halt\n"));
  InterpResult r = interpret(p, {{"x", 3}});
  ASSERT_TRUE(r.halted);
  EXPECT_EQ(r.env.at("x"), 0);
}

TEST(ImpTest, MalformedProgramsAreRejected) {
  EXPECT_THROW(parse_imp("0: x = 1\n0: halt\n"), ParseError);
  EXPECT_THROW(parse_imp("0: x = 1\n"), ParseError);
  EXPECT_THROW(parse_imp("0: goto 7\nh: halt\n"), ParseError);
  EXPECT_THROW(parse_imp("0: halt\n1: halt\n"), ParseError);
  EXPECT_THROW(parse_imp("0: x = y * z\nh: halt\n"), ParseError);
  EXPECT_THROW(parse_imp("0: halt\n1: x = 1\n"), ParseError);
}

}  // namespace
}  // namespace hornlin
