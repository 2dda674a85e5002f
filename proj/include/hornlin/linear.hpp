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

#ifndef HORNLIN_LINEAR_HPP
#define HORNLIN_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hornlin/term.hpp"

namespace hornlin {

constexpr size_t kDefaultRowBudget = 10000;
constexpr size_t kDefaultBranchBudget = 20000;

enum class QResult { Sat, Unsat };

struct ZResult {
  enum Kind { Sat, Unsat, Unknown };
  Kind kind = Unknown;
  IntEnv witness;
};

struct EntailResult {
  enum Kind { Valid, Invalid, Unknown };
  Kind kind = Unknown;
  IntEnv witness;
};

// Concatenation that drops true ground conjuncts; a false ground conjunct
// collapses the result to a single false relation.
Constraint conjoin(const Constraint& a, const Constraint& b);
Constraint simplify_ground(const Constraint& c);

// Rational satisfiability by Fourier-Motzkin elimination. Throws
// ResourceLimit when more than `row_budget` rows are generated.
QResult sat_q(const Constraint& c, size_t row_budget = kDefaultRowBudget);
// Rational witness, or nothing when unsatisfiable.
std::optional<RatEnv> solve_q(const Constraint& c, size_t row_budget = kDefaultRowBudget);

// Integer satisfiability by branch and bound over the rational relaxation
// (with integer tightening of every row). `budget` bounds the number of
// branch nodes; exhaustion gives Unknown.
ZResult sat_z(const Constraint& c, size_t budget = kDefaultBranchBudget,
              size_t row_budget = kDefaultRowBudget);

// Projects away `vs`: equalities are used as substitutions first, the
// remaining variables are removed by Fourier-Motzkin. Exact over Q.
Constraint eliminate(const Constraint& c, const VarSet& vs,
                     size_t row_budget = kDefaultRowBudget);

// Integer entailment c1 -> c2, conjunct by conjunct.
EntailResult entails(const Constraint& c1, const Constraint& c2,
                     size_t budget = kDefaultBranchBudget);

// Negation over the integers of one relation: one relation for
// inequalities, two alternatives for an equality.
std::vector<LinRel> negate_over_z(const LinRel& r);

// Classes (size >= 2) of variables that the equalities of `c` force to be
// equal. Members keep the order of `order`; variables absent from `order`
// are appended by name.
std::vector<std::vector<Var>> equal_variable_classes(const Constraint& c,
                                                     const std::vector<Var>& order);

// Drops inequality conjuncts entailed over Q by the remaining ones.
Constraint remove_redundant(const Constraint& c, size_t row_budget = kDefaultRowBudget);

}  // namespace hornlin

#endif  // HORNLIN_LINEAR_HPP
