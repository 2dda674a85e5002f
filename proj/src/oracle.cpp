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

#include "hornlin/oracle.hpp"

#include <sstream>

#include "hornlin/chc.hpp"
#include "hornlin/linear.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {

OracleResult bounded_counterexample(const ClauseSet& s, size_t depth, size_t budget) {
  OracleResult res;
  res.depth = depth;
  bool unknown = false;
  for (size_t gi = 0; gi < s.size(); ++gi) {
    const Clause& g = s[gi];
    if (!g.is_goal()) continue;
    DeriveOptions opts;
    opts.depth = depth;
    opts.budget = budget - res.nodes;
    Deriver d(s, opts);
    bool found = false;
    DeriveStatus st = d.run(g.constraint, g.body, [&](const DerivationLeaf& leaf) {
      res.leaf = leaf;
      found = true;
      return false;
    });
    res.nodes += d.stats().nodes;
    if (found) {
      res.kind = OracleResult::Cex;
      res.goal_index = gi;
      res.goal = g;
      return res;
    }
    if (d.stats().unknown_leaves > 0) unknown = true;
    if (st == DeriveStatus::BudgetExhausted) {
      res.kind = OracleResult::BudgetExhausted;
      return res;
    }
  }
  res.kind = unknown ? OracleResult::Unknown : OracleResult::NoCex;
  return res;
}

bool replay_cex(const ClauseSet& s, const OracleResult& r) {
  if (r.kind != OracleResult::Cex) return false;
  for (const auto& rel : r.leaf.constraint) {
    if (!rel.holds(r.leaf.witness)) return false;
  }
  FreshVars fresh;
  for (const auto& c : s) fresh.reserve_all(c);
  fresh.reserve_all(r.goal);
  Constraint acc = r.goal.constraint;
  std::vector<Atom> atoms = r.goal.body;
  std::vector<Var> qv = r.goal.vars();
  Subst answer;
  for (const auto& v : qv) answer[v] = LinExpr::variable(v);
  for (size_t ci : r.leaf.steps) {
    if (atoms.empty() || ci >= s.size()) return false;
    Clause k = rename_apart(s[ci], fresh);
    std::vector<Var> kv = k.vars();
    auto u = unify_with_residue(atoms.front(), *k.head, VarSet(kv.begin(), kv.end()));
    if (!u) return false;
    const Subst& th = u->first;
    Constraint next;
    for (const auto& x : acc) next.push_back(x.substitute(th));
    for (const auto& x : u->second) next.push_back(x.substitute(th));
    for (const auto& x : k.constraint) next.push_back(x.substitute(th));
    std::vector<Atom> rest;
    for (const auto& b : k.body) rest.push_back(b.substitute(th));
    for (size_t i = 1; i < atoms.size(); ++i) rest.push_back(atoms[i].substitute(th));
    for (auto& [q, t] : answer) t = t.substitute(th);
    acc = std::move(next);
    atoms = std::move(rest);
  }
  if (!atoms.empty()) return false;
  for (const auto& [q, t] : answer) {
    acc.push_back(LinRel::make(t, RelOp::Eq, LinExpr::constant(Rat(r.leaf.witness.at(q)))));
  }
  return sat_z(acc).kind == ZResult::Sat;
}

bool cex_violates_spec(const OracleResult& r, const SpecTriple& t, const ImpProgram& p,
                       std::string* detail) {
  if (r.kind != OracleResult::Cex) return false;
  const ImpProgram q = p.normalized ? p : normalize_jumps(p);
  IntEnv env = r.leaf.witness;
  std::ostringstream os;
  bool any = false;
  for (const auto& a : r.goal.body) {
    if (a.pred != t.r_name()) continue;
    any = true;
    IntEnv init;
    std::map<Var, Int> param_value;
    for (size_t i = 0; i < t.params.size(); ++i) {
      param_value[t.params[i]] = a.args[i].eval(env).get_num();
    }
    for (const auto& [z, b] : t.bindings) {
      init[z] = b.kind == Binding::Const ? b.value : param_value.count(b.param) ? param_value[b.param] : Int(0);
    }
    InterpResult run = interpret(q, init);
    if (!run.halted) {
      os << "program did not halt on the counterexample input; ";
      if (detail) *detail = os.str();
      return false;
    }
    const Term& out = a.args.back();
    Int actual = run.env.at(t.result_var);
    os << to_string(a) << " with output " << actual << "; ";
    if (!out.is_var()) {
      if (out.eval(env) != Rat(actual)) {
        if (detail) *detail = os.str() + "claimed output differs from the interpreter";
        return false;
      }
      continue;
    }
    env[out.var()] = actual;
  }
  bool violated = any;
  for (const auto& rel : r.goal.constraint) violated = violated && rel.holds(env);
  if (detail) *detail = os.str() + (violated ? "postcondition violated" : "no violation");
  return violated;
}

std::string to_string(const OracleResult& r) {
  std::ostringstream os;
  switch (r.kind) {
    case OracleResult::NoCex:
      os << "no counterexample up to depth " << r.depth;
      break;
    case OracleResult::Unknown:
      os << "unknown: some leaf constraints were undecided up to depth " << r.depth;
      break;
    case OracleResult::BudgetExhausted:
      os << "budget exhausted after " << r.nodes << " resolvents";
      break;
    case OracleResult::Cex: {
      os << "counterexample for goal " << r.goal_index << ": " << to_string(r.goal) << "\n  witness:";
      for (const auto& v : r.goal.vars()) os << " " << v << "=" << r.leaf.witness.at(v);
      break;
    }
  }
  return os.str();
}

}  // namespace hornlin
