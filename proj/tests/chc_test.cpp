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

#include "hornlin/chc.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {
namespace {

TEST(SyntaxTest, ClausePrintsBackToSource) {
  const std::string src = "p(X,Y) :- X>=0, Y=X+1, q(X).";
  EXPECT_EQ(to_string(parse_clause(src)), src);
}

TEST(SyntaxTest, GoalAndFactForms) {
  Clause g = parse_clause("false :- X>0, p(X).");
  EXPECT_TRUE(g.is_goal());
  Clause f = parse_clause("p(0,1).");
  EXPECT_TRUE(f.is_fact());
  EXPECT_TRUE(f.constraint.empty());
}

TEST(SyntaxTest, DisjunctionSplitsClause) {
  ClauseSet s = parse_clauses("p(X) :- X>0 ; X<0.\n");
  EXPECT_EQ(s.size(), 2u);
}

TEST(SyntaxTest, DirectivesAreCollected) {
  ClauseSet s = parse_clauses("%@ nounfold 0 3\n% comment\np(X) :- X>0.\n");
  ASSERT_EQ(s.directives().count("nounfold"), 1u);
  EXPECT_EQ(s.directives().at("nounfold"), (std::vector<std::string>{"0", "3"}));
}

TEST(SyntaxTest, ParseErrorHasLocation) {
  try {
    parse_clauses("p(X) :- X>0.\nq(X) :- X >.\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(SyntaxTest, ArityClashIsRejected) {
  EXPECT_THROW(parse_clauses("p(X) :- X>0.\np(X,Y) :- X>Y.\n"), ClauseError);
}

TEST(SyntaxTest, NonlinearProductIsRejected) {
  EXPECT_THROW(parse_clause("p(X,Y) :- X*Y>0."), ParseError);
}

TEST(ChcTest, CanonicalKeyIgnoresNamesAndConjunctOrder) {
  Clause a = parse_clause("p(X,Y) :- X>=0, Y=X+1, q(X).");
  Clause b = parse_clause("p(A,B) :- B=A+1, A>=0, q(A).");
  EXPECT_EQ(canonical_key(a), canonical_key(b));
  Clause c = parse_clause("p(A,B) :- B=A+2, A>=0, q(A).");
  EXPECT_NE(canonical_key(a), canonical_key(c));
}

TEST(ChcTest, CanonicalKeyNormalizesRelations) {
  EXPECT_EQ(canonical_key(parse_clause("false :- X<Y, p(X,Y).")),
            canonical_key(parse_clause("false :- Y>X, p(X,Y).")));
}

TEST(ChcTest, CanonicallyEqualSetsIgnoreClauseOrder) {
  ClauseSet a = parse_clauses("p(X) :- X=0.\nq(X) :- X=1.\n");
  ClauseSet b = parse_clauses("q(Y) :- Y=1.\np(Z) :- Z=0.\n");
  EXPECT_TRUE(canonically_equal(a, b));
}

TEST(ChcTest, UnifyBindsVariables) {
  Atom a = parse_clause("p(X,Y).").head.value();
  Atom b = parse_clause("p(U,3).").head.value();
  auto mgu = unify_atoms(a, b);
  ASSERT_TRUE(mgu.has_value());
  EXPECT_EQ(a.substitute(*mgu), b.substitute(*mgu));
}

TEST(ChcTest, UnifyFailsOnDistinctExpressions) {
  Atom a = parse_clause("p(X+1).").head.value();
  Atom b = parse_clause("p(Y+2).").head.value();
  EXPECT_FALSE(unify_atoms(a, b).has_value());
  auto res = unify_with_residue(a, b, {});
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->second.size(), 1u);
}

TEST(ChcTest, UnifyFailsOnPredicateOrConstantClash) {
  EXPECT_FALSE(unify_atoms(parse_clause("p(1).").head.value(), parse_clause("p(2).").head.value()));
  EXPECT_FALSE(unify_atoms(parse_clause("p(X).").head.value(), parse_clause("q(X).").head.value()));
}

TEST(ChcTest, FlattenReplacesExpressionsOnly) {
  Clause c = parse_clause("r(N,U,V) :- N>=1, r(N-1,U+V,V).");
  Clause f = flatten(c);
  for (const auto& t : f.body[0].args) EXPECT_TRUE(t.is_var());
  EXPECT_EQ(f.constraint.size(), 3u);
  Clause repeated = parse_clause("r(N,U,V) :- r(N,U,U).");
  EXPECT_EQ(canonical_key(flatten(repeated)), canonical_key(repeated));
}

TEST(ChcTest, RenameApartAvoidsCapture) {
  FreshVars fresh;
  Clause c = parse_clause("p(X) :- X>0, q(X).");
  fresh.reserve_all(c);
  Clause d = rename_apart(c, fresh);
  for (const auto& v : d.vars()) EXPECT_NE(v, "X");
  EXPECT_EQ(canonical_key(c), canonical_key(d));
}

}  // namespace
}  // namespace hornlin
