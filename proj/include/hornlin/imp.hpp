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

#ifndef HORNLIN_IMP_HPP
#define HORNLIN_IMP_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hornlin/term.hpp"

namespace hornlin {

constexpr size_t kDefaultMaxSteps = 100000;

// Statement of the imperative language. Structured forms (While, If) only
// occur before normalization; afterwards every command is an Assign, a
// conditional jump (Ite), a Goto or the Halt command.
struct Command {
  enum Kind { Assign, Ite, Goto, Halt, Skip, While, If };

  Kind kind = Skip;
  std::vector<std::string> labels;
  // Assign.
  Var var;
  LinExpr expr;
  // Ite, While, If: the condition `cond` (negated when `negated` holds).
  LinRel cond;
  bool negated = false;
  // Ite and Goto targets; an empty else target falls through.
  std::string then_label;
  std::string else_label;
  // While body, If branches.
  std::vector<Command> body;
  std::vector<Command> orelse;
  int line = 0;
};

struct ImpProgram {
  std::vector<Command> commands;
  // Program variables by first textual occurrence.
  std::vector<Var> variables;
  bool normalized = false;
  // Normalized programs only: every label (source or generated) to the
  // index of the command it names.
  std::map<std::string, size_t> label_index;
  // Labels named by source-level goto and if-goto commands.
  std::set<std::string> source_targets;

  size_t halt_index() const;
  // Index of the command named `label`; throws Error when absent.
  size_t index_of(const std::string& label) const;
  // Label printed for command `i` of a normalized program.
  const std::string& label_of(size_t i) const { return commands.at(i).labels.front(); }
};

// Parses program text: labeled statements `l: s`, assignments `x = e`,
// `while (c) { ... }`, `if (c) { ... } else { ... }`,
// `if (c) goto l [else goto l2]`, `goto l`, `skip`, `halt`. Statement
// separators `;` are optional. Throws ParseError.
ImpProgram parse_imp(const std::string& text);

// Lowers structured control flow into labeled conditional jumps. Every
// command of the result carries at least one label; generated labels are
// `L<index>`.
ImpProgram normalize_jumps(const ImpProgram& p);

// Indices of the targets of backward jumps and of every source-level
// goto: the commands at which a loop can be re-entered.
std::vector<size_t> loop_heads(const ImpProgram& normalized);

struct InterpResult {
  bool halted = false;
  IntEnv env;
  size_t steps = 0;
};

// Runs a normalized program from `env` (missing variables are 0). Halted
// results carry the final environment; otherwise the fuel ran out.
InterpResult interpret(const ImpProgram& p, const IntEnv& env,
                       size_t max_steps = kDefaultMaxSteps);

std::string to_string(const ImpProgram& p);

}  // namespace hornlin

#endif  // HORNLIN_IMP_HPP
