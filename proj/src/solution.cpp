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

#include "hornlin/solution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hornlin/errors.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {

void SymbolicInterp::set(const std::string& pred, std::vector<Var> params, Constraint c) {
  std::set<Var> ps(params.begin(), params.end());
  if (ps.size() != params.size()) {
    throw SolutionError("repeated parameter in the interpretation of " + pred);
  }
  std::vector<Var> vs;
  for (const auto& r : c) r.expr.collect_vars(vs);
  for (const auto& v : vs) {
    if (!ps.count(v)) {
      throw SolutionError("interpretation of " + pred + " mentions " + v +
                          ", which is not a parameter");
    }
  }
  entries_[pred] = Entry{std::move(params), std::move(c)};
}

const SymbolicInterp::Entry& SymbolicInterp::at(const std::string& pred) const {
  auto it = entries_.find(pred);
  if (it == entries_.end()) throw SolutionError("no interpretation for predicate " + pred);
  return it->second;
}

Constraint SymbolicInterp::instantiate(const Atom& a) const {
  const Entry& e = at(a.pred);
  if (e.params.size() != a.args.size()) {
    throw SolutionError("interpretation of " + a.pred + " has arity " +
                        std::to_string(e.params.size()) + ", atom has " +
                        std::to_string(a.args.size()));
  }
  Subst th;
  for (size_t i = 0; i < e.params.size(); ++i) th[e.params[i]] = a.args[i];
  Constraint out;
  out.reserve(e.constraint.size());
  for (const auto& r : e.constraint) out.push_back(r.substitute(th));
  return simplify_ground(out);
}

SymbolicInterp parse_solution(const std::string& text) {
  ClauseParser p(tokenize(text, nullptr));
  SymbolicInterp sigma;
  while (!p.at_end()) {
    const Token& kw = p.next();
    if (kw.kind != Token::Ident || kw.text != "sigma") {
      throw ParseError("expected 'sigma'", kw.line, kw.column);
    }
    const Token& at = p.peek();
    Atom a = p.parse_atom();
    std::vector<Var> params;
    for (const auto& t : a.args) {
      if (!t.is_var()) throw ParseError("parameters must be variables", at.line, at.column);
      params.push_back(t.var());
    }
    Constraint c;
    if (p.accept(":-")) c = p.parse_conjunction();
    p.expect(".");
    if (sigma.covers(a.pred)) {
      throw ParseError("second interpretation of " + a.pred, at.line, at.column);
    }
    sigma.set(a.pred, std::move(params), std::move(c));
  }
  return sigma;
}

std::string to_string(const SymbolicInterp& sigma) {
  std::ostringstream os;
  for (const auto& [pred, e] : sigma.entries()) {
    Atom a{pred, {}};
    for (const auto& v : e.params) a.args.push_back(LinExpr::variable(v));
    os << "sigma " << to_string(a);
    if (!e.constraint.empty()) os << " :- " << to_string(e.constraint);
    os << ".\n";
  }
  return os.str();
}

bool SolutionReport::all_valid() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const ClauseVerdict& v) { return v.kind == ClauseVerdict::Valid; });
}

bool SolutionReport::any_invalid() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const ClauseVerdict& v) { return v.kind == ClauseVerdict::Invalid; });
}

namespace {

Constraint antecedent(const Clause& c, const SymbolicInterp& sigma) {
  Constraint ante = c.constraint;
  for (const auto& b : c.body) ante = conjoin(ante, sigma.instantiate(b));
  return ante;
}

Constraint consequent(const Clause& c, const SymbolicInterp& sigma) {
  if (!c.head) return {LinRel::falsum()};
  return sigma.instantiate(*c.head);
}

}  // namespace

SolutionReport verify_solution(const ClauseSet& s, const SymbolicInterp& sigma, size_t budget) {
  for (const auto& pred : s.predicates()) {
    if (!sigma.covers(pred)) throw SolutionError("no interpretation for predicate " + pred);
  }
  SolutionReport rep;
  for (const auto& c : s) {
    EntailResult e = entails(antecedent(c, sigma), consequent(c, sigma), budget);
    ClauseVerdict v;
    switch (e.kind) {
      case EntailResult::Valid:
        v.kind = ClauseVerdict::Valid;
        break;
      case EntailResult::Invalid:
        v.kind = ClauseVerdict::Invalid;
        v.witness = e.witness;
        for (const auto& x : c.vars()) v.witness.emplace(x, Int(0));
        break;
      case EntailResult::Unknown:
        v.kind = ClauseVerdict::Unknown;
        break;
    }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

bool witness_refutes(const Clause& c, const SymbolicInterp& sigma, const IntEnv& w) {
  IntEnv env = w;
  for (const auto& x : c.vars()) env.emplace(x, Int(0));
  for (const auto& r : antecedent(c, sigma)) {
    if (!r.holds(env)) return false;
  }
  for (const auto& r : consequent(c, sigma)) {
    if (!r.holds(env)) return true;
  }
  return false;
}

SymbolicInterp transport_solution(const SymbolicInterp& sigma,
                                  const std::vector<Clause>& definitions) {
  SymbolicInterp out = sigma;
  for (const auto& d : definitions) {
    if (!d.head) throw SolutionError("definition without head: " + to_string(d));
    std::vector<Var> params;
    for (const auto& t : d.head->args) {
      if (!t.is_var()) throw SolutionError("definition head must list variables: " + to_string(d));
      params.push_back(t.var());
    }
    Constraint body = d.constraint;
    for (const auto& b : d.body) body = conjoin(body, sigma.instantiate(b));
    VarSet drop;
    for (const auto& v : d.vars()) drop.insert(v);
    for (const auto& v : params) drop.erase(v);
    Constraint proj = is_false(body) ? body : eliminate(body, drop);
    out.set(d.head->pred, std::move(params), remove_redundant(proj));
  }
  return out;
}

std::string to_string(const SolutionReport& r, const ClauseSet& s) {
  std::ostringstream os;
  for (size_t i = 0; i < r.verdicts.size(); ++i) {
    const ClauseVerdict& v = r.verdicts[i];
    os << (v.kind == ClauseVerdict::Valid     ? "valid  "
           : v.kind == ClauseVerdict::Invalid ? "invalid"
                                              : "unknown")
       << " " << to_string(s[i]);
    if (v.kind == ClauseVerdict::Invalid) {
      os << "  witness:";
      for (const auto& [x, val] : v.witness) os << " " << x << "=" << val.get_str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hornlin
