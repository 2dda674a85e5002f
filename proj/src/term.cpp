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

#include "hornlin/term.hpp"

#include <algorithm>
#include <numeric>

#include "hornlin/errors.hpp"

namespace hornlin {

LinExpr LinExpr::variable(const Var& v) {
  LinExpr e;
  e.coeffs_[v] = 1;
  return e;
}

LinExpr LinExpr::constant(const Rat& c) {
  LinExpr e;
  e.constant_ = c;
  return e;
}

Rat LinExpr::coeff(const Var& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void LinExpr::add_term(const Var& v, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool LinExpr::is_var() const {
  return coeffs_.size() == 1 && constant_ == 0 && coeffs_.begin()->second == 1;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  for (const auto& [v, c] : o.coeffs_) add_term(v, c);
  constant_ += o.constant_;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  for (const auto& [v, c] : o.coeffs_) add_term(v, -c);
  constant_ -= o.constant_;
  return *this;
}

LinExpr& LinExpr::operator*=(const Rat& k) {
  if (k == 0) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [v, c] : coeffs_) c *= k;
  constant_ *= k;
  return *this;
}

LinExpr LinExpr::operator-() const {
  LinExpr r = *this;
  r *= Rat(-1);
  return r;
}

bool LinExpr::operator<(const LinExpr& o) const {
  if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
  return constant_ < o.constant_;
}

void LinExpr::collect_vars(std::vector<Var>& out) const {
  for (const auto& kv : coeffs_) out.push_back(kv.first);
}

LinExpr LinExpr::substitute(const Subst& s) const {
  if (s.empty()) return *this;
  LinExpr r = LinExpr::constant(constant_);
  for (const auto& [v, c] : coeffs_) {
    auto it = s.find(v);
    if (it == s.end()) {
      r.add_term(v, c);
    } else {
      r += it->second * c;
    }
  }
  return r;
}

LinExpr LinExpr::rename(const std::map<Var, Var>& ren) const {
  LinExpr r = LinExpr::constant(constant_);
  for (const auto& [v, c] : coeffs_) {
    auto it = ren.find(v);
    r.add_term(it == ren.end() ? v : it->second, c);
  }
  return r;
}

Rat LinExpr::eval(const RatEnv& env) const {
  Rat r = constant_;
  for (const auto& [v, c] : coeffs_) r += c * env.at(v);
  return r;
}

Rat LinExpr::eval(const IntEnv& env) const {
  Rat r = constant_;
  for (const auto& [v, c] : coeffs_) r += c * Rat(env.at(v));
  return r;
}

TermKind kind_of(const Term& t) {
  if (t.is_var()) return TermKind::Var;
  if (t.is_int_const()) return TermKind::IntConst;
  return TermKind::Expr;
}

LinRel LinRel::make(const LinExpr& lhs, RelOp op, const LinExpr& rhs) {
  switch (op) {
    case RelOp::Eq:
      return {lhs - rhs, Rel::Eq};
    case RelOp::Ge:
      return {lhs - rhs, Rel::Ge};
    case RelOp::Gt:
      return {lhs - rhs, Rel::Gt};
    case RelOp::Le:
      return {rhs - lhs, Rel::Ge};
    case RelOp::Lt:
      return {rhs - lhs, Rel::Gt};
  }
  return {lhs - rhs, Rel::Eq};
}

LinRel LinRel::falsum() { return {LinExpr::constant(-1), Rel::Ge}; }

bool LinRel::ground_value() const {
  const Rat& k = expr.constant_term();
  switch (rel) {
    case Rel::Eq:
      return k == 0;
    case Rel::Ge:
      return k >= 0;
    case Rel::Gt:
      return k > 0;
  }
  return false;
}

LinRel LinRel::normalized() const {
  if (is_ground()) {
    return ground_value() ? LinRel{LinExpr::constant(0), Rel::Eq} : falsum();
  }
  // Scale by the lcm of denominators, then divide by the gcd of numerators.
  Int l = 1;
  for (const auto& kv : expr.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kv.second.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), expr.constant_term().get_den_mpz_t());
  LinExpr e = expr * Rat(l);
  Int g = 0;
  for (const auto& kv : e.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_num_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.constant_term().get_num_mpz_t());
  if (g != 0 && g != 1) e *= Rat(1, 1) / Rat(g);
  if (rel == Rel::Eq && e.coeffs().begin()->second < 0) e *= Rat(-1);
  return {e, rel};
}

bool LinRel::holds(const RatEnv& env) const {
  return LinRel{LinExpr::constant(expr.eval(env)), rel}.ground_value();
}

bool LinRel::holds(const IntEnv& env) const {
  return LinRel{LinExpr::constant(expr.eval(env)), rel}.ground_value();
}

bool LinRel::operator<(const LinRel& o) const {
  if (rel != o.rel) return rel < o.rel;
  return expr < o.expr;
}

bool is_false(const Constraint& c) {
  return std::any_of(c.begin(), c.end(),
                     [](const LinRel& r) { return r.is_ground() && !r.ground_value(); });
}

bool Atom::operator<(const Atom& o) const {
  if (pred != o.pred) return pred < o.pred;
  return args < o.args;
}

Atom Atom::substitute(const Subst& s) const {
  Atom a{pred, {}};
  a.args.reserve(args.size());
  for (const auto& t : args) a.args.push_back(t.substitute(s));
  return a;
}

Atom Atom::rename(const std::map<Var, Var>& r) const {
  Atom a{pred, {}};
  a.args.reserve(args.size());
  for (const auto& t : args) a.args.push_back(t.rename(r));
  return a;
}

void Atom::collect_vars(std::vector<Var>& out) const {
  for (const auto& t : args) t.collect_vars(out);
}

std::vector<Var> Clause::vars() const {
  std::vector<Var> all;
  if (head) head->collect_vars(all);
  for (const auto& a : body) a.collect_vars(all);
  for (const auto& r : constraint) r.expr.collect_vars(all);
  std::vector<Var> out;
  VarSet seen;
  for (auto& v : all) {
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

void ClauseSet::check_atom(const Atom& a) {
  auto [it, inserted] = arity_.emplace(a.pred, a.args.size());
  if (!inserted && it->second != a.args.size()) {
    throw ClauseError("predicate " + a.pred + " used with arity " +
                      std::to_string(a.args.size()) + " and " + std::to_string(it->second));
  }
}

void ClauseSet::declare(const std::string& pred, size_t arity) {
  check_atom(Atom{pred, std::vector<Term>(arity)});
}

void ClauseSet::add(const Clause& c) {
  if (c.head) check_atom(*c.head);
  for (const auto& a : c.body) check_atom(a);
  clauses_.push_back(c);
}

void ClauseSet::add_all(const ClauseSet& other) {
  for (const auto& [p, n] : other.arity_) declare(p, n);
  for (const auto& c : other.clauses_) add(c);
  for (const auto& [k, v] : other.directives_) {
    auto& mine = directives_[k];
    for (const auto& x : v) {
      if (std::find(mine.begin(), mine.end(), x) == mine.end()) mine.push_back(x);
    }
  }
}

size_t ClauseSet::max_body_width() const {
  size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, c.body.size());
  return w;
}

std::set<std::string> ClauseSet::predicates() const {
  std::set<std::string> out;
  for (const auto& kv : arity_) out.insert(kv.first);
  return out;
}

}  // namespace hornlin
