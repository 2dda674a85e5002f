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

#ifndef HORNLIN_TERM_HPP
#define HORNLIN_TERM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornlin/rational.hpp"

namespace hornlin {

using Var = std::string;
using VarSet = std::set<Var>;
using IntEnv = std::map<Var, Int>;
using RatEnv = std::map<Var, Rat>;

class LinExpr;
using Term = LinExpr;
using Subst = std::map<Var, Term>;

// Linear expression sum(c_i * x_i) + k with exact rational coefficients.
// Zero coefficients are never stored, so a constant expression has an
// empty coefficient map.
class LinExpr {
 public:
  LinExpr() = default;

  static LinExpr variable(const Var& v);
  static LinExpr constant(const Rat& c);

  const std::map<Var, Rat>& coeffs() const { return coeffs_; }
  const Rat& constant_term() const { return constant_; }
  Rat coeff(const Var& v) const;

  void add_term(const Var& v, const Rat& c);
  void add_constant(const Rat& c) { constant_ += c; }

  bool is_constant() const { return coeffs_.empty(); }
  bool is_var() const;
  // Name of the single variable; only valid when is_var() holds.
  const Var& var() const { return coeffs_.begin()->first; }
  bool is_int_const() const { return is_constant() && is_integer(constant_); }
  bool mentions(const Var& v) const { return coeffs_.count(v) != 0; }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rat& k);
  LinExpr operator-() const;
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rat& k) { return a *= k; }

  bool operator==(const LinExpr& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LinExpr& o) const { return !(*this == o); }
  bool operator<(const LinExpr& o) const;

  // Appends the variables in coefficient-map order.
  void collect_vars(std::vector<Var>& out) const;
  // Simultaneous substitution of variables by expressions.
  LinExpr substitute(const Subst& s) const;
  LinExpr rename(const std::map<Var, Var>& r) const;
  // Evaluates under an assignment; missing variables throw std::out_of_range.
  Rat eval(const RatEnv& env) const;
  Rat eval(const IntEnv& env) const;

 private:
  std::map<Var, Rat> coeffs_;
  Rat constant_;
};

enum class TermKind { Var, IntConst, Expr };
TermKind kind_of(const Term& t);

// Stored relations; `<` and `=<` are turned around at construction.
enum class Rel { Eq, Ge, Gt };
enum class RelOp { Eq, Ge, Gt, Le, Lt };

// Atomic linear relation `expr rel 0`.
struct LinRel {
  LinExpr expr;
  Rel rel = Rel::Ge;

  static LinRel make(const LinExpr& lhs, RelOp op, const LinExpr& rhs);
  static LinRel falsum();

  bool is_ground() const { return expr.is_constant(); }
  // Truth value of a ground relation.
  bool ground_value() const;
  // Primitive integer coefficients; equalities get a positive leading
  // coefficient. Relation and strictness are preserved.
  LinRel normalized() const;
  LinRel substitute(const Subst& s) const { return {expr.substitute(s), rel}; }
  LinRel rename(const std::map<Var, Var>& r) const { return {expr.rename(r), rel}; }
  bool holds(const RatEnv& env) const;
  bool holds(const IntEnv& env) const;

  bool operator==(const LinRel& o) const { return rel == o.rel && expr == o.expr; }
  bool operator<(const LinRel& o) const;
};

// Conjunction of atomic relations; the empty conjunction is true.
using Constraint = std::vector<LinRel>;

bool is_false(const Constraint& c);

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool operator==(const Atom& o) const { return pred == o.pred && args == o.args; }
  bool operator!=(const Atom& o) const { return !(*this == o); }
  bool operator<(const Atom& o) const;
  Atom substitute(const Subst& s) const;
  Atom rename(const std::map<Var, Var>& r) const;
  void collect_vars(std::vector<Var>& out) const;
};

// A constrained Horn clause `head :- constraint, body`. An absent head
// denotes `false`.
struct Clause {
  std::optional<Atom> head;
  Constraint constraint;
  std::vector<Atom> body;

  bool is_goal() const { return !head.has_value(); }
  bool is_fact() const { return head.has_value() && body.empty(); }
  bool is_linear() const { return body.size() <= 1; }

  // Variables by first occurrence: head, body atoms, then constraint.
  std::vector<Var> vars() const;
  bool operator==(const Clause& o) const {
    return head == o.head && constraint == o.constraint && body == o.body;
  }
};

// Ordered clause sequence with a consistent predicate signature table.
class ClauseSet {
 public:
  ClauseSet() = default;

  // Appends a clause; throws ClauseError on an arity clash.
  void add(const Clause& c);
  void add_all(const ClauseSet& other);
  void declare(const std::string& pred, size_t arity);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::map<std::string, size_t>& signature() const { return arity_; }
  size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  const Clause& operator[](size_t i) const { return clauses_[i]; }
  std::vector<Clause>::const_iterator begin() const { return clauses_.begin(); }
  std::vector<Clause>::const_iterator end() const { return clauses_.end(); }

  // Free-form `%@ key values...` lines carried through files.
  std::map<std::string, std::vector<std::string>>& directives() { return directives_; }
  const std::map<std::string, std::vector<std::string>>& directives() const {
    return directives_;
  }

  // Largest body width over all clauses.
  size_t max_body_width() const;
  std::set<std::string> predicates() const;

 private:
  void check_atom(const Atom& a);

  std::vector<Clause> clauses_;
  std::map<std::string, size_t> arity_;
  std::map<std::string, std::vector<std::string>> directives_;
};

}  // namespace hornlin

#endif  // HORNLIN_TERM_HPP
