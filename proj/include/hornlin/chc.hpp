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

#ifndef HORNLIN_CHC_HPP
#define HORNLIN_CHC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hornlin/term.hpp"

namespace hornlin {

// Session-local supply of fresh variable names `Base_k`.
class FreshVars {
 public:
  FreshVars() = default;

  Var next(const Var& base);
  void reserve(const Var& v) { reserved_.insert(v); }
  void reserve_all(const Clause& c);

 private:
  VarSet reserved_;
  unsigned long counter_ = 0;
};

// Strips a trailing `_<digits>` suffix added by FreshVars.
Var base_name(const Var& v);

// Renames variables to V0, V1, ... by first occurrence (head, body atoms,
// then constraint-only variables) and sorts the normalized conjuncts.
// Alpha-equivalent clauses give identical results.
Clause canonicalize(const Clause& c);
// Printed canonical form, usable as a map key.
std::string canonical_key(const Clause& c);
// Sorted canonical keys of all clauses.
std::vector<std::string> canonical_keys(const ClauseSet& s);
// Equality of clause multisets up to variable renaming and conjunct order.
bool canonically_equal(const ClauseSet& a, const ClauseSet& b);

// Most general unifier; expressions unify only with variables or
// syntactically equal expressions. The result is idempotent.
std::optional<Subst> unify_atoms(const Atom& a1, const Atom& a2);

// Unification used by unfolding: positions that cannot be unified
// syntactically are returned as equality conjuncts instead of failing.
// Variable-variable pairs bind a variable of `prefer` when possible.
// Fails only on a predicate/arity mismatch or two distinct constants.
std::optional<std::pair<Subst, Constraint>> unify_with_residue(const Atom& a1, const Atom& a2,
                                                               const VarSet& prefer);

Clause apply_subst(const Clause& c, const Subst& s);
Clause rename_clause(const Clause& c, const std::map<Var, Var>& r);
// Renames every variable of `c` to a fresh one.
Clause rename_apart(const Clause& c, FreshVars& fresh);

// Replaces every non-variable body-atom argument by a fresh variable and
// adds the defining equality to the constraint.
Clause flatten(const Clause& c, FreshVars& fresh);
Clause flatten(const Clause& c);

// Renames variables to short readable names derived from their base names.
Clause prettify(const Clause& c);

}  // namespace hornlin

#endif  // HORNLIN_CHC_HPP
