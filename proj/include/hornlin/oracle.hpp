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

#ifndef HORNLIN_ORACLE_HPP
#define HORNLIN_ORACLE_HPP

#include <cstddef>
#include <string>

#include "hornlin/derive.hpp"
#include "hornlin/imp.hpp"
#include "hornlin/spec.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

constexpr size_t kDefaultOracleDepth = 8;
constexpr size_t kDefaultOracleBudget = 1000000;

struct OracleResult {
  enum Kind { NoCex, Cex, Unknown, BudgetExhausted };
  Kind kind = NoCex;
  size_t depth = 0;
  // Resolvents generated over all goals.
  size_t nodes = 0;
  // Cex only: the refuted goal, its index in the clause set and the
  // successful derivation with its integer witness.
  size_t goal_index = 0;
  Clause goal;
  DerivationLeaf leaf;
};

// Unfolds every goal with the definite clauses up to `depth` and reports
// the first derivation whose constraint is integer-satisfiable. `budget`
// bounds the resolvents generated over all goals.
OracleResult bounded_counterexample(const ClauseSet& s, size_t depth = kDefaultOracleDepth,
                                    size_t budget = kDefaultOracleBudget);

// Checks a Cex: the witness satisfies the leaf constraint exactly, and
// re-resolving the goal along the recorded clause indices yields an
// atom-free constraint satisfiable with the query variables pinned to the
// witness.
bool replay_cex(const ClauseSet& s, const OracleResult& r);

// Runs the program on the inputs of every `r_prog` atom of the refuted
// goal and checks that the goal constraint still holds once the claimed
// outputs are replaced by the interpreter's results, i.e. that the
// counterexample is a real violation of the postcondition.
bool cex_violates_spec(const OracleResult& r, const SpecTriple& t, const ImpProgram& p,
                       std::string* detail = nullptr);

std::string to_string(const OracleResult& r);

}  // namespace hornlin

#endif  // HORNLIN_ORACLE_HPP
