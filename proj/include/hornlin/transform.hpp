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

#ifndef HORNLIN_TRANSFORM_HPP
#define HORNLIN_TRANSFORM_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hornlin/chc.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

// Resolves body atom `pos` of `c` against every clause of `cls` whose head
// unifies with it, dropping resolvents whose constraint is Q-unsatisfiable.
std::vector<Clause> unfold(const Clause& c, size_t pos, const ClauseSet& cls, FreshVars& fresh);
ClauseSet unfold(const Clause& c, size_t pos, const ClauseSet& cls);

// Memo of introduced predicates keyed by the canonical form of
// `newp(head vars) :- atoms`.
class DefsTable {
 public:
  // `prefix` names new predicates prefix1, prefix2, ...; when
  // `bare_first` holds the first one is just `prefix`. Names in `taken`
  // are skipped.
  DefsTable(std::string prefix, bool bare_first, std::set<std::string> taken);

  // Returns the predicate defined by `head_vars :- body` and whether it was
  // introduced by this call.
  std::pair<std::string, bool> lookup_or_define(const std::vector<Atom>& body,
                                                const std::vector<Var>& head_vars);

  // Definition clauses in introduction order.
  const std::vector<Clause>& definitions() const { return defs_; }
  size_t size() const { return defs_.size(); }

 private:
  std::string mint();

  std::string prefix_;
  bool bare_first_;
  std::set<std::string> taken_;
  size_t counter_ = 0;
  std::map<std::string, std::string> by_key_;
  std::vector<Clause> defs_;
};

// Record of rule applications. Each step names the clause it acted on and
// the clauses it produced.
struct TraceStep {
  enum Kind { Unfold, Simplify, Flatten, Define, Fold, Emit };
  Kind kind = Emit;
  Clause input;
  size_t position = 0;
  std::vector<Clause> outputs;
};

struct TransformTrace {
  std::vector<TraceStep> steps;

  // One line per step: rule, position, canonical input and outputs.
  std::string to_text() const;
};

// Re-applies every recorded step, checking each against a fresh
// application of the rule, and returns the emitted clauses. Unfold steps
// are checked against `unfold_with` extended by the recorded definitions.
// Throws TransformError on the first step that does not reproduce.
ClauseSet replay_trace(const TransformTrace& trace, const ClauseSet& unfold_with);

// Removal of the interpreter: specializes the OpSem clauses (carrying the
// `nounfold` and `relation` directives) to clauses for r_prog and new
// predicates r, r1, ... Throws TransformError without annotations.
ClauseSet remove_interpreter(const ClauseSet& opsem, TransformTrace* trace = nullptr);

// Splits `pc` into its OpSem part and the rest, applies
// remove_interpreter to the former and returns the union.
ClauseSet apply_ri(const ClauseSet& pc, TransformTrace* trace = nullptr);

struct LinStats {
  size_t definitions = 0;
  // Largest atom count of a goal body given to the strategy.
  size_t max_goal_atoms = 0;
  // Largest atom count of an introduced definition body.
  size_t max_definition_atoms = 0;
  // Introduced definition clauses `newK(X..) :- A1, ..., An.`
  std::vector<Clause> definition_clauses;
};

// Linearization: `lcls` must be linear and `gls` goals. Nonlinear goals
// and every introduced definition are unfolded against `lcls`, simplified
// and folded into new predicates new1, new2, ... Throws TransformError on
// a nonlinear clause in `lcls` or a non-goal in `gls`.
ClauseSet linearize(const ClauseSet& lcls, const ClauseSet& gls, TransformTrace* trace = nullptr,
                    LinStats* stats = nullptr);

// Splits a clause set into its non-goal clauses and its goals and runs
// linearize on them.
ClauseSet apply_lin(const ClauseSet& cls, TransformTrace* trace = nullptr,
                    LinStats* stats = nullptr);

// Merges variables forced equal by the equalities, removes duplicate and
// Q-redundant conjuncts. Head variables are preferred as representatives.
Clause simplify_clause(const Clause& c);

}  // namespace hornlin

#endif  // HORNLIN_TRANSFORM_HPP
