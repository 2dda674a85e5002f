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

#ifndef HORNLIN_DERIVE_HPP
#define HORNLIN_DERIVE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hornlin/linear.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

struct DeriveOptions {
  // Maximal height of a derivation tree: atoms created at this depth
  // cannot be resolved and the state holding them is discarded.
  size_t depth = 8;
  // Maximal number of generated resolvents.
  size_t budget = 1000000;
  // Branch-and-bound budget of each leaf check.
  size_t z_budget = kDefaultBranchBudget;
};

// Successful derivation: every atom resolved and the accumulated
// constraint integer-satisfiable.
struct DerivationLeaf {
  Constraint constraint;
  // Query variable to the term it was instantiated to.
  Subst answer;
  // Integer values of the query variables and of the leaf constraint.
  IntEnv witness;
  // Indices (into the clause set) of the resolved clauses, in order.
  std::vector<size_t> steps;
};

enum class DeriveStatus { Exhausted, Stopped, BudgetExhausted };

struct DeriveStats {
  size_t nodes = 0;
  // Leaves whose integer check returned Unknown.
  size_t unknown_leaves = 0;
  // Some state was discarded because of the depth bound.
  bool depth_cut = false;
};

// Depth-first SLD resolution with leftmost atom selection and constraint
// pruning over Q at every step.
class Deriver {
 public:
  Deriver(const ClauseSet& clauses, DeriveOptions opts);

  // Enumerates derivations of `c, atoms`. `visit` returns false to stop.
  DeriveStatus run(const Constraint& c, const std::vector<Atom>& atoms,
                   const std::function<bool(const DerivationLeaf&)>& visit);

  const DeriveStats& stats() const { return stats_; }

 private:
  struct State;
  bool explore(State& s, const std::function<bool(const DerivationLeaf&)>& visit);

  const ClauseSet& clauses_;
  DeriveOptions opts_;
  std::map<std::string, std::vector<size_t>> by_head_;
  std::vector<Var> query_vars_;
  DeriveStats stats_;
  unsigned long counter_ = 0;
  bool budget_hit_ = false;
};

}  // namespace hornlin

#endif  // HORNLIN_DERIVE_HPP
