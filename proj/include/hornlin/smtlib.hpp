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

#ifndef HORNLIN_SMTLIB_HPP
#define HORNLIN_SMTLIB_HPP

#include <string>

#include "hornlin/term.hpp"

namespace hornlin {

// SMT-LIB 2 script in the HORN logic: one Int-sorted relation declaration
// per predicate (in order of first use), one universally closed
// implication per clause (goals imply false) and a final check-sat.
std::string emit_smtlib(const ClauseSet& s);

// Reads the subset written by emit_smtlib: set-logic, set-info,
// set-option, declare-fun with Int arguments and Bool result, assert,
// check-sat, get-model and exit. An assertion is `(forall (bindings) F)`
// or F, where F is `(=> B H)`, a predicate application or `(not B)`; B is
// a conjunction of linear relations and applications, H an application or
// false. Throws ParseError with the location of the offending token.
ClauseSet parse_smtlib(const std::string& text);

}  // namespace hornlin

#endif  // HORNLIN_SMTLIB_HPP
