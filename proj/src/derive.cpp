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

#include "hornlin/derive.hpp"

#include <utility>

#include "hornlin/chc.hpp"
#include "hornlin/errors.hpp"

namespace hornlin {

struct Deriver::State {
  Constraint constraint;
  std::vector<std::pair<Atom, size_t>> atoms;
  Subst answer;
  std::vector<size_t> steps;
};

Deriver::Deriver(const ClauseSet& clauses, DeriveOptions opts)
    : clauses_(clauses), opts_(opts) {
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].head) by_head_[clauses[i].head->pred].push_back(i);
  }
}

DeriveStatus Deriver::run(const Constraint& c, const std::vector<Atom>& atoms,
                          const std::function<bool(const DerivationLeaf&)>& visit) {
  stats_ = DeriveStats{};
  budget_hit_ = false;
  State s;
  s.constraint = simplify_ground(c);
  std::vector<Var> vs;
  for (const auto& r : c) r.expr.collect_vars(vs);
  for (const auto& a : atoms) {
    a.collect_vars(vs);
    s.atoms.emplace_back(a, 0);
  }
  query_vars_.clear();
  for (const auto& v : vs) {
    if (!s.answer.count(v)) {
      s.answer[v] = LinExpr::variable(v);
      query_vars_.push_back(v);
    }
  }
  if (is_false(s.constraint)) return DeriveStatus::Exhausted;
  if (!explore(s, visit)) return DeriveStatus::Stopped;
  return budget_hit_ ? DeriveStatus::BudgetExhausted : DeriveStatus::Exhausted;
}

namespace {

IntEnv complete_witness(const IntEnv& w, const Subst& answer) {
  IntEnv env = w;
  std::vector<Var> vs;
  for (const auto& [q, t] : answer) {
    (void)q;
    t.collect_vars(vs);
  }
  for (const auto& v : vs) env.emplace(v, Int(0));
  for (const auto& [q, t] : answer) env[q] = t.eval(env).get_num();
  return env;
}

// Solves equalities that have a unit coefficient on some variable and
// substitutes them away. Resolvent variables are eliminated before
// query variables. The result is equivalent over Z.
Subst eliminate_unit_equalities(Constraint& c) {
  Subst solved;
  for (;;) {
    size_t row = c.size();
    Var pick;
    bool pick_fresh = false;
    for (size_t i = 0; i < c.size() && !pick_fresh; ++i) {
      if (c[i].rel != Rel::Eq || c[i].expr.is_constant()) continue;
      c[i] = c[i].normalized();
      for (const auto& [v, k] : c[i].expr.coeffs()) {
        if (k != 1 && k != -1) continue;
        bool fresh = v.find('\'') != Var::npos;
        if (row == c.size() || (fresh && !pick_fresh)) {
          row = i;
          pick = v;
          pick_fresh = fresh;
          if (fresh) break;
        }
      }
    }
    if (row == c.size()) break;
    LinExpr e = c[row].expr;
    Rat k = e.coeff(pick);
    e.add_term(pick, -k);
    e *= Rat(-1) / k;
    Subst one{{pick, e}};
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(row));
    for (auto& r : c) r = r.substitute(one);
    for (auto& [v, t] : solved) t = t.substitute(one);
    solved[pick] = e;
    c = simplify_ground(c);
    if (is_false(c)) break;
  }
  return solved;
}

}  // namespace

bool Deriver::explore(State& s, const std::function<bool(const DerivationLeaf&)>& visit) {
  if (s.atoms.empty()) {
    ZResult z = sat_z(s.constraint, opts_.z_budget);
    if (z.kind == ZResult::Unknown) ++stats_.unknown_leaves;
    if (z.kind != ZResult::Sat) return true;
    DerivationLeaf leaf{s.constraint, s.answer, complete_witness(z.witness, s.answer), s.steps};
    return visit(leaf);
  }
  auto [atom, depth] = s.atoms.front();
  auto it = by_head_.find(atom.pred);
  if (it == by_head_.end()) return true;
  for (size_t ci : it->second) {
    if (stats_.nodes >= opts_.budget) {
      budget_hit_ = true;
      return true;
    }
    ++stats_.nodes;
    const Clause& cl = clauses_[ci];
    std::map<Var, Var> ren;
    VarSet prefer;
    for (const auto& v : cl.vars()) {
      Var n = v + "'" + std::to_string(++counter_);
      ren[v] = n;
      prefer.insert(n);
    }
    Clause inst = rename_clause(cl, ren);
    auto u = unify_with_residue(atom, *inst.head, prefer);
    if (!u) continue;
    Subst th = u->first;
    bool too_deep = !inst.body.empty() && depth + 1 >= opts_.depth;
    if (too_deep) {
      stats_.depth_cut = true;
      continue;
    }
    State child;
    child.constraint.reserve(s.constraint.size() + inst.constraint.size() + u->second.size());
    for (const auto& r : s.constraint) child.constraint.push_back(r.substitute(th));
    for (const auto& r : u->second) child.constraint.push_back(r.substitute(th));
    for (const auto& r : inst.constraint) child.constraint.push_back(r.substitute(th));
    child.constraint = simplify_ground(child.constraint);
    if (is_false(child.constraint)) continue;
    Subst solved = eliminate_unit_equalities(child.constraint);
    if (is_false(child.constraint)) continue;
    if (!solved.empty()) {
      Subst composed = th;
      for (auto& [v, t] : composed) t = t.substitute(solved);
      for (const auto& [v, t] : solved) composed.emplace(v, t);
      th = composed;
    }
    bool feasible = true;
    try {
      feasible = sat_q(child.constraint) == QResult::Sat;
    } catch (const ResourceLimit&) {
      feasible = true;
    }
    if (!feasible) continue;
    for (const auto& b : inst.body) child.atoms.emplace_back(b.substitute(th), depth + 1);
    for (size_t k = 1; k < s.atoms.size(); ++k) {
      child.atoms.emplace_back(s.atoms[k].first.substitute(th), s.atoms[k].second);
    }
    for (const auto& [q, t] : s.answer) child.answer[q] = t.substitute(th);
    child.steps = s.steps;
    child.steps.push_back(ci);
    if (!explore(child, visit)) return false;
  }
  return true;
}

}  // namespace hornlin
