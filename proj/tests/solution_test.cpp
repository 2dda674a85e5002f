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

#include "hornlin/errors.hpp"
#include "hornlin/oracle.hpp"
#include "hornlin/solution.hpp"
#include "hornlin/transform.hpp"
#include "test_util.hpp"

namespace hornlin {
namespace {

using testing::corpus;
using testing::read_file;

ClauseSet chc(const std::string& name) { return parse_clauses(read_file(corpus("chc/" + name + ".chc"))); }
SymbolicInterp sigma(const std::string& file) {
  return parse_solution(read_file(corpus("chc/" + file + ".sigma")));
}

TEST(SolutionTest, DoublingSolutionIsValid) {
  SolutionReport rep = verify_solution(chc("doubling"), sigma("doubling"));
  ASSERT_EQ(rep.verdicts.size(), 3u);
  EXPECT_TRUE(rep.all_valid());
}

TEST(SolutionTest, WeakenedSolutionFailsOnGoal) {
  ClauseSet s = chc("doubling");
  SymbolicInterp weak = sigma("doubling_weak");
  SolutionReport rep = verify_solution(s, weak);
  EXPECT_EQ(rep.verdicts[0].kind, ClauseVerdict::Valid);
  EXPECT_EQ(rep.verdicts[1].kind, ClauseVerdict::Valid);
  ASSERT_EQ(rep.verdicts[2].kind, ClauseVerdict::Invalid);
  EXPECT_TRUE(witness_refutes(s[2], weak, rep.verdicts[2].witness));
  const IntEnv& w = rep.verdicts[2].witness;
  EXPECT_GT(w.at("Y"), 2 * w.at("X"));
  EXPECT_GE(w.at("X"), 0);
}

TEST(SolutionTest, ValidGoalsHaveNoBoundedCounterexample) {
  for (const char* name : {"doubling", "counters", "triangular"}) {
    ClauseSet s = chc(name);
    SolutionReport rep = verify_solution(s, sigma(name));
    for (size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_goal() || rep.verdicts[i].kind != ClauseVerdict::Valid) continue;
      ClauseSet one;
      for (const auto& c : s) {
        if (!c.is_goal()) one.add(c);
      }
      one.add(s[i]);
      EXPECT_NE(bounded_counterexample(one, 8).kind, OracleResult::Cex) << name << " " << i;
    }
  }
}

TEST(SolutionTest, TrueEverywhereSolvesDefiniteSets) {
  ClauseSet s = parse_clauses("p(X) :- X=0.\np(X) :- X>0, p(X-1), q(X).\nq(Y) :- Y<3.\n");
  SolutionReport rep = verify_solution(s, parse_solution("sigma p(X).\nsigma q(Y).\n"));
  EXPECT_TRUE(rep.all_valid());
}

TEST(SolutionTest, MissingPredicateIsAnError) {
  EXPECT_THROW(verify_solution(chc("counters"), sigma("doubling")), SolutionError);
}

TEST(SolutionTest, ConstraintMustOnlyMentionParameters) {
  EXPECT_THROW(parse_solution("sigma p(X) :- Y>0.\n"), SolutionError);
  EXPECT_THROW(parse_solution("sigma p(X,X) :- X>0.\n"), SolutionError);
  EXPECT_THROW(parse_solution("p(X) :- X>0.\n"), ParseError);
}

TEST(SolutionTest, InstantiationSubstitutesArguments) {
  SymbolicInterp s = parse_solution("sigma p(X,Y) :- Y=2*X, X>=0.\n");
  Constraint c = s.instantiate(parse_clause("p(A+1,B).").head.value());
  EXPECT_EQ(to_string(c), to_string(parse_constraint("B=2*A+2, A+1>=0")));
}

TEST(SolutionTest, TransportedSolutionsVerifyAfterLinearization) {
  for (const char* name : {"doubling", "counters", "triangular"}) {
    ClauseSet s = chc(name);
    SymbolicInterp sg = sigma(name);
    ASSERT_TRUE(verify_solution(s, sg).all_valid()) << name;
    LinStats st;
    ClauseSet lin = apply_lin(s, nullptr, &st);
    SymbolicInterp moved = transport_solution(sg, st.definition_clauses);
    EXPECT_TRUE(verify_solution(lin, moved).all_valid()) << name;
  }
}

}  // namespace
}  // namespace hornlin
