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

#ifndef HORNLIN_SYNTAX_HPP
#define HORNLIN_SYNTAX_HPP

#include <map>
#include <string>
#include <vector>

#include "hornlin/term.hpp"

namespace hornlin {

// Prolog-style printing: `p(X,Y) :- X>=0, Y=X+1, q(X).`
std::string to_string(const LinExpr& e);
std::string to_string(const LinRel& r);
std::string to_string(const Constraint& c);
std::string to_string(const Atom& a);
std::string to_string(const Clause& c);
// One clause per line, preceded by `%@` directive lines.
std::string to_string(const ClauseSet& s);

// Parses a clause file. `;` in a body splits the clause into one clause
// per disjunct. Throws ParseError or ClauseError.
ClauseSet parse_clauses(const std::string& text);
// Parses exactly one clause without disjunction.
Clause parse_clause(const std::string& text);
// Parses a comma-separated conjunction of linear relations.
Constraint parse_constraint(const std::string& text);

struct Token {
  enum Kind { Ident, Variable, Number, Punct, End };
  Kind kind = End;
  std::string text;
  int line = 1;
  int column = 1;
};

// Tokenizer shared by the clause, spec and solution parsers. `%` starts a
// comment; `%@ key values` lines are collected into `directives`.
std::vector<Token> tokenize(const std::string& text,
                            std::map<std::string, std::vector<std::string>>* directives);

// Recursive-descent parser over a token stream.
class ClauseParser {
 public:
  explicit ClauseParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  bool at_end() const { return peek().kind == Token::End; }
  const Token& peek(size_t ahead = 0) const;
  const Token& next();
  bool accept(const std::string& punct);
  void expect(const std::string& punct);
  bool is_punct(const std::string& punct, size_t ahead = 0) const;
  [[noreturn]] void fail(const std::string& msg) const;

  // Reads one clause terminated by `.`; may return several on `;`.
  std::vector<Clause> parse_clause();
  // Linear expression over variables; when `idents_are_vars` holds,
  // lower-case identifiers are read as variables too.
  LinExpr parse_expr(bool idents_are_vars = false);
  RelOp parse_relop();
  LinRel parse_relation(bool idents_are_vars = false);
  Atom parse_atom(bool idents_are_vars = false);
  Constraint parse_conjunction();

  size_t position() const { return pos_; }
  void reset(size_t pos) { pos_ = pos; }

 private:
  struct Alt {
    Constraint constraint;
    std::vector<Atom> atoms;
  };
  std::vector<Alt> parse_disj();
  std::vector<Alt> parse_conj();
  std::vector<Alt> parse_item();
  LinExpr parse_term(bool idents_are_vars);
  LinExpr parse_factor(bool idents_are_vars);

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace hornlin

#endif  // HORNLIN_SYNTAX_HPP
