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
#include "hornlin/linear.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {
namespace {

bool holds_all(const Constraint& c, const IntEnv& env) {
  for (const auto& r : c) {
    if (!r.holds(env)) return false;
  }
  return true;
}

TEST(LinearTest, RationalUnsatisfiableBounds) {
  EXPECT_EQ(sat_q(parse_constraint("X>=1, X=<0")), QResult::Unsat);
  EXPECT_EQ(sat_q(parse_constraint("X>=1, X=<1")), QResult::Sat);
}

TEST(LinearTest, RationalWitnessSatisfiesConstraint) {
  Constraint c = parse_constraint("X+Y>=3, X-Y=1, Y>0");
  auto w = solve_q(c);
  ASSERT_TRUE(w.has_value());
  for (const auto& r : c) EXPECT_TRUE(r.holds(*w));
}

TEST(LinearTest, IntegerGapIsUnsatOverZOnly) {
  Constraint c = parse_constraint("2*X=1");
  EXPECT_EQ(sat_q(c), QResult::Sat);
  EXPECT_EQ(sat_z(c).kind, ZResult::Unsat);
}

TEST(LinearTest, UnboundedLatticeFreeEqualityIsUnsat) {
  EXPECT_EQ(sat_z(parse_constraint("3*X-3*Y=1")).kind, ZResult::Unsat);
}

TEST(LinearTest, BranchAndBoundFindsIntegerPoint) {
  Constraint c = parse_constraint("2*X+2*Y>=3, 2*X+2*Y=<5, X>=0, Y>=0");
  ZResult z = sat_z(c);
  ASSERT_EQ(z.kind, ZResult::Sat);
  EXPECT_TRUE(holds_all(c, z.witness));
}

TEST(LinearTest, StrictBoundsTightenOverIntegers) {
  EXPECT_EQ(sat_z(parse_constraint("X>0, X<1")).kind, ZResult::Unsat);
  EXPECT_EQ(sat_q(parse_constraint("X>0, X<1")), QResult::Sat);
}

TEST(LinearTest, EliminateProjectsOntoRemainingVariables) {
  Constraint p = eliminate(parse_constraint("X=Y+1, Y>=0"), VarSet{"Y"});
  EXPECT_EQ(entails(p, parse_constraint("X>=1")).kind, EntailResult::Valid);
  EXPECT_EQ(entails(parse_constraint("X>=1"), p).kind, EntailResult::Valid);
  for (const auto& r : p) EXPECT_FALSE(r.expr.mentions("Y"));
}

TEST(LinearTest, EliminateByFourierMotzkin) {
  Constraint p = eliminate(parse_constraint("X=<Y, Y=<Z"), VarSet{"Y"});
  EXPECT_EQ(entails(p, parse_constraint("X=<Z")).kind, EntailResult::Valid);
}

TEST(LinearTest, EntailmentWithUnsatAntecedentIsValid) {
  Constraint ante = parse_constraint("Y=2*X, X>=0, Y>2*X");
  EXPECT_EQ(entails(ante, {LinRel::falsum()}).kind, EntailResult::Valid);
}

TEST(LinearTest, EntailmentIsReflexive) {
  Constraint c = parse_constraint("X>=0, Y=X+2, Z>Y");
  EXPECT_EQ(entails(c, c).kind, EntailResult::Valid);
}

TEST(LinearTest, EntailmentIsTransitiveOnChain) {
  Constraint a = parse_constraint("X>=5");
  Constraint b = parse_constraint("X>=3");
  Constraint c = parse_constraint("X>=0");
  EXPECT_EQ(entails(a, b).kind, EntailResult::Valid);
  EXPECT_EQ(entails(b, c).kind, EntailResult::Valid);
  EXPECT_EQ(entails(a, c).kind, EntailResult::Valid);
}

TEST(LinearTest, InvalidEntailmentCarriesWitness) {
  Constraint ante = parse_constraint("X>=0");
  Constraint cons = parse_constraint("Y=<2*X");
  EntailResult e = entails(ante, cons);
  ASSERT_EQ(e.kind, EntailResult::Invalid);
  EXPECT_TRUE(holds_all(ante, e.witness));
  EXPECT_FALSE(holds_all(cons, e.witness));
}

TEST(LinearTest, NegatingEqualityGivesTwoAlternatives) {
  EXPECT_EQ(negate_over_z(parse_constraint("X=3")[0]).size(), 2u);
  EXPECT_EQ(negate_over_z(parse_constraint("X>=3")[0]).size(), 1u);
}

TEST(LinearTest, GroundConjunctsSimplify) {
  EXPECT_TRUE(simplify_ground(parse_constraint("1>=0, 2=2")).empty());
  EXPECT_TRUE(is_false(simplify_ground(parse_constraint("X>=0, 0>1"))));
}

TEST(LinearTest, EqualVariableClasses) {
  auto classes = equal_variable_classes(parse_constraint("A=B, C=1, D=1, E=A+1"), {"A", "B", "C", "D", "E"});
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0], (std::vector<Var>{"A", "B"}));
  EXPECT_EQ(classes[1], (std::vector<Var>{"C", "D"}));
}

TEST(LinearTest, RedundantInequalitiesAreDropped) {
  Constraint r = remove_redundant(parse_constraint("X>=0, X>=1, Y=X"));
  EXPECT_EQ(r.size(), 2u);
}

TEST(LinearTest, RowBudgetRaisesResourceLimit) {
  std::string text;
  for (int i = 0; i < 16; ++i) {
    if (!text.empty()) text += ", ";
    text += std::to_string(i);
    for (int j = 0; j < 8; ++j) {
      int c = (i * 7 + j * 3) % 5 - 2;
      if (c == 0) c = i % 2 ? 1 : -1;
      text += (c > 0 ? "+" : "-") + std::to_string(c > 0 ? c : -c) + "*Y" + std::to_string(j);
    }
    text += ">=0";
  }
  VarSet all;
  for (int j = 0; j < 7; ++j) all.insert("Y" + std::to_string(j));
  EXPECT_THROW(eliminate(parse_constraint(text), all, 50), ResourceLimit);
}

}  // namespace
}  // namespace hornlin
