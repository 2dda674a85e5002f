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
#include "hornlin/encoder.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/transform.hpp"
#include "test_util.hpp"

namespace hornlin {
namespace {

using testing::load_golden;
using testing::load_program;
using testing::load_spec;

ClauseSet fib_opsem() { return encode_opsem(load_program("fibonacci"), load_spec("fibonacci")); }

ClauseSet only_goal(const ClauseSet& goals, size_t i) {
  ClauseSet s;
  s.add(goals[i]);
  return s;
}

TEST(TransformTest, UnfoldResolvesAgainstMatchingHeads) {
  ClauseSet defs = parse_clauses("q(X) :- X=0.\nq(X) :- X>0, q(X-1).\nr(X) :- X<0.\n");
  Clause c = parse_clause("p(Y) :- Y>=0, q(Y).");
  ClauseSet out = unfold(c, 0, defs);
  EXPECT_EQ(out.size(), 2u);
}

TEST(TransformTest, UnfoldDropsUnsatisfiableResolvents) {
  ClauseSet defs = parse_clauses("q(X) :- X=0.\nq(X) :- X>5.\n");
  ClauseSet out = unfold(parse_clause("p(Y) :- Y<0, q(Y)."), 0, defs);
  EXPECT_TRUE(out.empty());
}

TEST(TransformTest, DefinitionsAreReusedUpToRenaming) {
  DefsTable defs("new", false, {});
  auto b1 = parse_clause("false :- q(X,Y), q(Y,Z).").body;
  auto b2 = parse_clause("false :- q(A,B), q(B,C).").body;
  auto [n1, fresh1] = defs.lookup_or_define(b1, {"X", "Z"});
  auto [n2, fresh2] = defs.lookup_or_define(b2, {"A", "C"});
  EXPECT_TRUE(fresh1);
  EXPECT_FALSE(fresh2);
  EXPECT_EQ(n1, "new1");
  EXPECT_EQ(n2, "new1");
}

TEST(TransformTest, RemoveInterpreterMatchesReference) {
  ClauseSet ri = remove_interpreter(fib_opsem());
  EXPECT_TRUE(canonically_equal(ri, load_golden("fibonacci_ri.chc")));
  EXPECT_LE(ri.max_body_width(), 1u);
}

TEST(TransformTest, RemoveInterpreterNeedsAnnotations) {
  ClauseSet os = fib_opsem();
  ClauseSet bare;
  for (const auto& c : os) bare.add(c);
  EXPECT_THROW(remove_interpreter(bare), TransformError);
}

TEST(TransformTest, LinearizeMatchesReference) {
  ClauseSet ri = remove_interpreter(fib_opsem());
  ClauseSet goals = build_pcorr(load_spec("fibonacci"));
  LinStats st;
  ClauseSet lin = linearize(ri, only_goal(goals, 4), nullptr, &st);
  EXPECT_TRUE(canonically_equal(lin, load_golden("fibonacci_lin.chc")));
  EXPECT_EQ(lin.size(), 3u + 1u + 14u);
  EXPECT_EQ(st.definitions, 3u);
  EXPECT_EQ(st.max_goal_atoms, 3u);
  EXPECT_EQ(st.max_definition_atoms, 3u);
  EXPECT_EQ(lin.signature().at("new1"), 8u);
  EXPECT_EQ(lin.signature().at("new2"), 4u);
  EXPECT_EQ(lin.signature().at("new3"), 6u);
  EXPECT_EQ(lin.max_body_width(), 1u);
}

TEST(TransformTest, LinearGoalsPassThrough) {
  ClauseSet ri = remove_interpreter(fib_opsem());
  ClauseSet goals = build_pcorr(load_spec("fibonacci"));
  ClauseSet lin_goals;
  for (size_t i = 0; i < 4; ++i) lin_goals.add(goals[i]);
  LinStats st;
  ClauseSet out = linearize(ri, lin_goals, nullptr, &st);
  ClauseSet expected = ri;
  expected.add_all(lin_goals);
  EXPECT_TRUE(canonically_equal(out, expected));
  EXPECT_EQ(st.definitions, 0u);
}

TEST(TransformTest, LinearizeRejectsBadInput) {
  ClauseSet nonlinear = parse_clauses("p(X) :- q(X), q(X).\nq(X) :- X=0.\n");
  ClauseSet goals = parse_clauses("false :- X>0, p(X).\n");
  EXPECT_THROW(linearize(nonlinear, goals), TransformError);
  ClauseSet lcls = parse_clauses("q(X) :- X=0.\n");
  EXPECT_THROW(linearize(lcls, lcls), TransformError);
}

TEST(TransformTest, TracesReplay) {
  ClauseSet os = fib_opsem();
  TransformTrace tri;
  ClauseSet ri = remove_interpreter(os, &tri);
  EXPECT_EQ(to_string(replay_trace(tri, os)), to_string(ri));
  TransformTrace tlin;
  ClauseSet lin = linearize(ri, only_goal(build_pcorr(load_spec("fibonacci")), 4), &tlin);
  EXPECT_EQ(to_string(replay_trace(tlin, ri)), to_string(lin));
  EXPECT_FALSE(tlin.to_text().empty());
}

TEST(TransformTest, CorpusOutputsAreLinearAndBounded) {
  for (const char* name : {"fibonacci", "gcd", "integer_division", "remainder", "sum_first_integers",
                           "integer_multiplication", "hanoi", "lucas", "padovan", "perrin"}) {
    ClauseSet ri = apply_ri(testing::load_pc(name));
    LinStats st;
    ClauseSet lin = apply_lin(ri, nullptr, &st);
    EXPECT_LE(lin.max_body_width(), 1u) << name;
    EXPECT_LE(st.max_definition_atoms, st.max_goal_atoms) << name;
  }
}

TEST(TransformTest, SimplifyMergesForcedEqualities) {
  Clause c = simplify_clause(parse_clause("p(X,Y) :- X=Z, Y=1, W=1, q(Z,W)."));
  EXPECT_EQ(canonical_key(c), canonical_key(parse_clause("p(X,Y) :- Y=1, q(X,Y).")));
}

}  // namespace
}  // namespace hornlin
