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

#ifndef HORNLIN_SPEC_HPP
#define HORNLIN_SPEC_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hornlin/imp.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

// Initial value of a program variable in the precondition.
struct Binding {
  enum Kind { Param, Const };
  Kind kind = Param;
  Var param;
  Int value;
};

// Partial correctness triple `{pre} program {f(P1,...,Ps,z)}` together with
// the clauses defining f and its auxiliary predicates.
struct SpecTriple {
  std::string program;
  // Program variable bindings in listing order.
  std::vector<std::pair<Var, Binding>> bindings;
  // Constraint part of the precondition (over parameters only).
  Constraint pre_constraint;
  // Atoms of the precondition (e.g. a recursively defined pre).
  std::vector<Atom> pre_atoms;
  // Postcondition predicate, its parameter arguments and the result
  // program variable.
  std::string f;
  std::vector<Var> params;
  Var result_var;
  ClauseSet spec;
  ClauseSet fdef;
  ClauseSet aux;

  // Name of the relation computed by the program: `r_<program>`.
  std::string r_name() const { return "r_" + program; }
  const Binding* binding_of(const Var& z) const;
};

// Parses `{ bindings } name { f(P1,...,Ps,z) }` followed by clauses. The
// keyword `triple` may precede the header. Throws ParseError or SpecError.
SpecTriple parse_spec(const std::string& text);

// Checks the triple against a program: bound and result variables exist.
// Throws SpecError.
void validate_spec(const SpecTriple& t, const ImpProgram& p);

// Header line of the triple in source syntax.
std::string triple_to_string(const SpecTriple& t);

struct FunctionalityEntry {
  enum Status { Unique, Unconfirmed, Violation, OutsidePre };
  std::vector<Int> params;
  std::vector<Int> values;
  Status status = Unconfirmed;
};

struct FunctionalityReport {
  std::vector<FunctionalityEntry> entries;
  bool uniqueness_violation = false;
};

// Bounded check of existence and uniqueness of f(p,Y) for sampled
// parameter tuples.
FunctionalityReport check_functionality(const SpecTriple& t,
                                        const std::vector<std::vector<Int>>& samples,
                                        size_t depth);

}  // namespace hornlin

#endif  // HORNLIN_SPEC_HPP
