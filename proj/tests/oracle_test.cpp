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

#include "hornlin/oracle.hpp"
#include "hornlin/transform.hpp"
#include "test_util.hpp"

namespace hornlin {
namespace {

using testing::load_program;

ClauseSet pc_for(const SpecTriple& t) {
  return assemble_pc(encode_opsem(load_program(t.program), t), t);
}

SpecTriple mutated_fib(const std::string& from, const std::string& to) {
  std::string text = testing::read_file(testing::corpus("specs/fibonacci.spec"));
  text.replace(text.find(from), from.size(), to);
  return parse_spec(text);
}

TEST(OracleTest, FibonacciHasNoShallowCounterexample) {
  ClauseSet pc = testing::load_pc("fibonacci");
  OracleResult r = bounded_counterexample(pc, 8);
  EXPECT_EQ(r.kind, OracleResult::NoCex);
  EXPECT_EQ(r.depth, 8u);
  EXPECT_EQ(to_string(r), "no counterexample up to depth 8");
  ClauseSet ri = apply_ri(pc);
  EXPECT_EQ(bounded_counterexample(ri, 8).kind, OracleResult::NoCex);
  EXPECT_EQ(bounded_counterexample(apply_lin(ri), 8).kind, OracleResult::NoCex);
}

TEST(OracleTest, MutatedBaseCaseIsRefuted) {
  SpecTriple t = mutated_fib("fib(0,1)", "fib(0,2)");
  ClauseSet pc = pc_for(t);
  OracleResult r = bounded_counterexample(pc, 8);
  ASSERT_EQ(r.kind, OracleResult::Cex);
  EXPECT_TRUE(replay_cex(pc, r));
  std::string detail;
  EXPECT_TRUE(cex_violates_spec(r, t, load_program("fibonacci"), &detail)) << detail;
}

TEST(OracleTest, DeeperMutantNeedsMoreDepth) {
  SpecTriple t = mutated_fib("fib(1,1)", "fib(1,2)");
  ClauseSet pc = pc_for(t);
  OracleResult r = bounded_counterexample(pc, 12);
  ASSERT_EQ(r.kind, OracleResult::Cex);
  EXPECT_TRUE(replay_cex(pc, r));
  EXPECT_EQ(r.goal.body[0].args[0].constant_term(), 1);
  EXPECT_TRUE(cex_violates_spec(r, t, load_program("fibonacci")));
}

TEST(OracleTest, AtomFreeGoalIsRefutedImmediately) {
  ClauseSet s = parse_clauses("false :- X>0.\n");
  OracleResult r = bounded_counterexample(s, 0);
  ASSERT_EQ(r.kind, OracleResult::Cex);
  EXPECT_GT(r.leaf.witness.at("X"), 0);
  EXPECT_TRUE(replay_cex(s, r));
}

TEST(OracleTest, BudgetExhaustionIsDistinct) {
  OracleResult r = bounded_counterexample(testing::load_pc("fibonacci"), 8, 5);
  EXPECT_EQ(r.kind, OracleResult::BudgetExhausted);
}

TEST(OracleTest, FlattenPreservesShallowVerdicts) {
  ClauseSet s = parse_clauses(
      "q(X,Y) :- X=0, Y=0.\nq(X,Y) :- X>0, q(X-1,Y-2).\nfalse :- Y>2*X, q(X,Y).\n");
  ClauseSet flat;
  for (const auto& c : s) flat.add(flatten(c));
  for (size_t k = 0; k <= 6; ++k) {
    EXPECT_EQ(bounded_counterexample(s, k).kind, bounded_counterexample(flat, k).kind) << k;
  }
}

}  // namespace
}  // namespace hornlin
