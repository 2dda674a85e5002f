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

#ifndef HORNLIN_SOLUTION_HPP
#define HORNLIN_SOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "hornlin/linear.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

// Map from predicate symbols to constraints over formal parameters.
class SymbolicInterp {
 public:
  struct Entry {
    std::vector<Var> params;
    Constraint constraint;
  };

  // Throws SolutionError when a parameter repeats or the constraint
  // mentions a variable that is not a parameter.
  void set(const std::string& pred, std::vector<Var> params, Constraint c);
  bool covers(const std::string& pred) const { return entries_.count(pred) != 0; }
  const Entry& at(const std::string& pred) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

  // Sigma(A): the constraint of A's predicate with the formal parameters
  // replaced by A's arguments. Throws SolutionError on a missing predicate
  // or an arity mismatch.
  Constraint instantiate(const Atom& a) const;

 private:
  std::map<std::string, Entry> entries_;
};

// Reads `sigma p(X1,...,Xm) :- c.` lines; `sigma p(X1,...,Xm).` stands
// for the constraint true. Throws ParseError or SolutionError.
SymbolicInterp parse_solution(const std::string& text);
std::string to_string(const SymbolicInterp& sigma);

struct ClauseVerdict {
  enum Kind { Valid, Invalid, Unknown };
  Kind kind = Unknown;
  // Invalid only: integer values of the clause variables under which the
  // body holds and the head does not.
  IntEnv witness;
};

struct SolutionReport {
  // One verdict per clause, in clause order.
  std::vector<ClauseVerdict> verdicts;

  bool all_valid() const;
  bool any_invalid() const;
};

// Checks `c, Sigma(A1), ..., Sigma(An) -> Sigma(A0)` for every clause (the
// consequent is false for goals). Throws SolutionError when a predicate
// of `s` is not covered.
SolutionReport verify_solution(const ClauseSet& s, const SymbolicInterp& sigma,
                               size_t budget = kDefaultBranchBudget);

// True when `w` satisfies the antecedent of `c` under `sigma` and falsifies
// its consequent. Variables missing from `w` read as 0.
bool witness_refutes(const Clause& c, const SymbolicInterp& sigma, const IntEnv& w);

// Extends `sigma` to predicates introduced by linearization. Each
// definition `newp(X..) :- A1, ..., An.` gets the conjunction of
// Sigma(Ai) projected onto X.. by Fourier-Motzkin.
SymbolicInterp transport_solution(const SymbolicInterp& sigma,
                                  const std::vector<Clause>& definitions);

std::string to_string(const SolutionReport& r, const ClauseSet& s);

}  // namespace hornlin

#endif  // HORNLIN_SOLUTION_HPP
