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

#ifndef HORNLIN_ENCODER_HPP
#define HORNLIN_ENCODER_HPP

#include <string>
#include <vector>

#include "hornlin/imp.hpp"
#include "hornlin/spec.hpp"
#include "hornlin/term.hpp"

namespace hornlin {

// Directive listing the labels of non-unfoldable reach atoms.
inline constexpr const char* kNoUnfoldDirective = "nounfold";
// Directive naming the relation computed by the program.
inline constexpr const char* kRelationDirective = "relation";

// Order of the configuration tuple: variables bound by the triple in
// listing order, then the remaining program variables.
std::vector<Var> env_order(const SpecTriple& t, const ImpProgram& p);

// Clause R for r_prog together with initCf, finalCf, reach and tr. A
// configuration is flattened into a label constant (command index)
// followed by the environment tuple. Throws EncodeError when `p` is not
// normalized.
ClauseSet encode_opsem(const ImpProgram& p, const SpecTriple& t);

// Goals `false :- c, Z>Y, B, r_prog(X,Z)` and `... Z<Y ...` for every
// clause `f(X,Y) :- c, B` defining f, with f renamed to r_prog.
ClauseSet build_pcorr(const SpecTriple& t);

// The goals together with the auxiliary clauses and the OpSem clauses;
// duplicates (up to renaming)
// removed and goals printed last.
ClauseSet assemble_pc(const ClauseSet& opsem, const SpecTriple& t);

}  // namespace hornlin

#endif  // HORNLIN_ENCODER_HPP
