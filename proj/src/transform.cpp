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

#include "hornlin/transform.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hornlin/encoder.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/linear.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {

namespace {

const std::set<std::string> kOpSemPreds = {"initCf", "finalCf", "reach", "tr"};

bool q_feasible(const Constraint& c) {
  try {
    return sat_q(c) == QResult::Sat;
  } catch (const ResourceLimit&) {
    return true;
  }
}

void reserve_set(FreshVars& fresh, const ClauseSet& s) {
  for (const auto& c : s) fresh.reserve_all(c);
}

std::vector<Var> atom_vars(const std::vector<Atom>& atoms) {
  std::vector<Var> all;
  for (const auto& a : atoms) a.collect_vars(all);
  std::vector<Var> out;
  for (const auto& v : all) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

Atom var_atom(const std::string& pred, const std::vector<Var>& vs) {
  Atom a{pred, {}};
  for (const auto& v : vs) a.args.push_back(LinExpr::variable(v));
  return a;
}

std::vector<std::string> sorted_keys(const std::vector<Clause>& cs) {
  std::vector<std::string> ks;
  for (const auto& c : cs) ks.push_back(canonical_key(c));
  std::sort(ks.begin(), ks.end());
  return ks;
}

void record(TransformTrace* trace, TraceStep::Kind kind, const Clause& in, size_t pos,
            std::vector<Clause> outs) {
  if (trace) trace->steps.push_back(TraceStep{kind, in, pos, std::move(outs)});
}

// Base names of the reach arguments, taken from the reflexive reach clause.
std::vector<Var> reach_slot_names(const ClauseSet& opsem) {
  for (const auto& c : opsem) {
    if (!c.head || c.head->pred != "reach" || !c.body.empty()) continue;
    std::vector<Var> names;
    for (const auto& a : c.head->args) names.push_back(a.is_var() ? base_name(a.var()) : Var("X"));
    return names;
  }
  return {};
}

// Replaces every environment argument of the reach atom at `idx` that is
// not a variable, or that is a variable occurring more than once among
// them, by a fresh variable defined by an equality. Label positions keep
// their constants.
Clause flatten_reach(const Clause& c, size_t idx, FreshVars& fresh,
                     const std::vector<Var>& slot_names) {
  Clause out = c;
  Atom& a = out.body[idx];
  size_t n = a.args.size();
  size_t half = n / 2;
  std::map<Var, int> count;
  for (size_t i = 0; i < n; ++i) {
    if (i % half != 0 && a.args[i].is_var()) ++count[a.args[i].var()];
  }
  for (size_t i = 0; i < n; ++i) {
    if (i % half == 0) continue;
    Term& t = a.args[i];
    if (t.is_var() && count[t.var()] == 1) continue;
    Var x = fresh.next(i < slot_names.size() ? slot_names[i] : Var("X"));
    out.constraint.push_back(LinRel::make(LinExpr::variable(x), RelOp::Eq, t));
    t = LinExpr::variable(x);
  }
  return out;
}

std::optional<size_t> reach_index(const Clause& c) {
  std::optional<size_t> idx;
  for (size_t i = 0; i < c.body.size(); ++i) {
    if (c.body[i].pred != "reach") continue;
    if (idx) throw TransformError("more than one reach atom after unfolding: " + to_string(c));
    idx = i;
  }
  return idx;
}

}  // namespace

std::vector<Clause> unfold(const Clause& c, size_t pos, const ClauseSet& cls, FreshVars& fresh) {
  if (pos >= c.body.size()) throw TransformError("unfold position out of range");
  const Atom& sel = c.body[pos];
  std::vector<Clause> out;
  for (const auto& k : cls) {
    if (!k.head || k.head->pred != sel.pred) continue;
    Clause r = rename_apart(k, fresh);
    std::vector<Var> rv = r.vars();
    VarSet prefer(rv.begin(), rv.end());
    auto u = unify_with_residue(sel, *r.head, prefer);
    if (!u) continue;
    const Subst& th = u->first;
    Clause res;
    if (c.head) res.head = c.head->substitute(th);
    const Constraint& residue = u->second;
    for (const Constraint* part :
         std::initializer_list<const Constraint*>{&c.constraint, &residue, &r.constraint}) {
      for (const auto& rel : *part) res.constraint.push_back(rel.substitute(th));
    }
    res.constraint = simplify_ground(res.constraint);
    if (is_false(res.constraint) || !q_feasible(res.constraint)) continue;
    for (size_t i = 0; i < pos; ++i) res.body.push_back(c.body[i].substitute(th));
    for (const auto& b : r.body) res.body.push_back(b.substitute(th));
    for (size_t i = pos + 1; i < c.body.size(); ++i) res.body.push_back(c.body[i].substitute(th));
    out.push_back(std::move(res));
  }
  return out;
}

ClauseSet unfold(const Clause& c, size_t pos, const ClauseSet& cls) {
  FreshVars fresh;
  fresh.reserve_all(c);
  reserve_set(fresh, cls);
  ClauseSet out;
  for (const auto& r : unfold(c, pos, cls, fresh)) out.add(r);
  return out;
}

DefsTable::DefsTable(std::string prefix, bool bare_first, std::set<std::string> taken)
    : prefix_(std::move(prefix)), bare_first_(bare_first), taken_(std::move(taken)) {}

std::string DefsTable::mint() {
  for (;;) {
    std::string name = (bare_first_ && counter_ == 0) ? prefix_ : prefix_ + std::to_string(counter_);
    if (!bare_first_ && counter_ == 0) {
      ++counter_;
      continue;
    }
    ++counter_;
    if (taken_.insert(name).second) return name;
  }
}

std::pair<std::string, bool> DefsTable::lookup_or_define(const std::vector<Atom>& body,
                                                         const std::vector<Var>& head_vars) {
  Clause probe{var_atom("def", head_vars), {}, body};
  std::string key = canonical_key(probe);
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return {it->second, false};
  std::string name = mint();
  by_key_.emplace(key, name);
  defs_.push_back(Clause{var_atom(name, head_vars), {}, body});
  return {name, true};
}

std::string TransformTrace::to_text() const {
  static const char* names[] = {"unfold", "simplify", "flatten", "define", "fold", "emit"};
  std::ostringstream os;
  for (const auto& s : steps) {
    os << names[s.kind];
    if (s.kind == TraceStep::Unfold) os << " " << s.position;
    os << " " << canonical_key(s.input) << " =>";
    for (const auto& c : s.outputs) os << " " << canonical_key(c);
    os << "\n";
  }
  return os.str();
}

Clause simplify_clause(const Clause& c) {
  std::vector<Var> order = c.vars();
  Subst merge;
  for (const auto& cls : equal_variable_classes(c.constraint, order)) {
    for (size_t i = 1; i < cls.size(); ++i) merge[cls[i]] = LinExpr::variable(cls.front());
  }
  Clause d = apply_subst(c, merge);
  d.constraint = simplify_ground(d.constraint);
  if (is_false(d.constraint)) return d;
  d.constraint = remove_redundant(d.constraint);
  return d;
}

ClauseSet replay_trace(const TransformTrace& trace, const ClauseSet& unfold_with) {
  FreshVars fresh;
  reserve_set(fresh, unfold_with);
  std::map<std::string, Clause> defs;
  std::set<std::string> def_keys;
  ClauseSet out;
  auto mismatch = [](const char* rule, const Clause& c) {
    throw TransformError(std::string("trace replay: ") + rule + " step does not reproduce on " +
                         to_string(c));
  };
  for (const auto& s : trace.steps) {
    fresh.reserve_all(s.input);
    for (const auto& o : s.outputs) fresh.reserve_all(o);
    switch (s.kind) {
      case TraceStep::Unfold:
        if (sorted_keys(unfold(s.input, s.position, unfold_with, fresh)) != sorted_keys(s.outputs)) {
          mismatch("unfold", s.input);
        }
        break;
      case TraceStep::Simplify:
        if (s.outputs.size() != 1 ||
            canonical_key(simplify_clause(flatten(s.input, fresh))) != canonical_key(s.outputs[0])) {
          mismatch("simplify", s.input);
        }
        break;
      case TraceStep::Flatten: {
        auto idx = reach_index(s.input);
        if (s.outputs.size() != 1 || !idx ||
            canonical_key(flatten_reach(s.input, *idx, fresh, reach_slot_names(unfold_with))) !=
                canonical_key(s.outputs[0])) {
          mismatch("flatten", s.input);
        }
        break;
      }
      case TraceStep::Define: {
        const Clause& d = s.outputs.at(0);
        Clause probe = d;
        probe.head->pred = "def";
        if (!def_keys.insert(canonical_key(probe)).second || defs.count(d.head->pred)) {
          mismatch("define", d);
        }
        defs[d.head->pred] = d;
        break;
      }
      case TraceStep::Fold: {
        const Clause& f = s.outputs.at(0);
        std::optional<size_t> pos;
        for (size_t i = 0; i < f.body.size(); ++i) {
          if (defs.count(f.body[i].pred)) pos = i;
        }
        if (!pos) mismatch("fold", s.input);
        ClauseSet one;
        one.add(defs.at(f.body[*pos].pred));
        auto back = unfold(f, *pos, one, fresh);
        if (back.size() != 1 || canonical_key(back[0]) != canonical_key(s.input)) {
          mismatch("fold", s.input);
        }
        break;
      }
      case TraceStep::Emit:
        out.add(s.outputs.at(0));
        break;
    }
  }
  return out;
}

ClauseSet remove_interpreter(const ClauseSet& opsem, TransformTrace* trace) {
  auto nd = opsem.directives().find(kNoUnfoldDirective);
  auto rd = opsem.directives().find(kRelationDirective);
  if (nd == opsem.directives().end() || rd == opsem.directives().end() || rd->second.size() != 1) {
    throw TransformError("OpSem clauses lack the nounfold/relation annotations");
  }
  std::set<Int> nounfold;
  for (const auto& l : nd->second) nounfold.insert(Int(l));
  const std::string& rel = rd->second[0];
  const Clause* rclause = nullptr;
  for (const auto& c : opsem) {
    if (c.head && c.head->pred == rel) {
      if (rclause) throw TransformError("more than one clause defines " + rel);
      rclause = &c;
    }
  }
  if (!rclause) throw TransformError("no clause defines " + rel);

  auto unfoldable = [&](const Atom& a) {
    if (a.pred == "initCf" || a.pred == "finalCf" || a.pred == "tr") return true;
    if (a.pred != "reach") return false;
    const Term& l = a.args.at(0);
    return l.is_int_const() && !nounfold.count(l.constant_term().get_num());
  };

  FreshVars fresh;
  reserve_set(fresh, opsem);
  const std::vector<Var> slot_names = reach_slot_names(opsem);
  DefsTable defs("r", true, opsem.predicates());
  std::deque<Clause> in{*rclause};
  ClauseSet out;
  while (!in.empty()) {
    Clause c = in.front();
    in.pop_front();
    if (c.body.empty()) continue;
    std::vector<Clause> work = unfold(c, 0, opsem, fresh);
    record(trace, TraceStep::Unfold, c, 0, work);
    std::vector<Clause> done;
    while (!work.empty()) {
      Clause d = work.front();
      work.erase(work.begin());
      std::optional<size_t> pos;
      for (size_t i = 0; i < d.body.size() && !pos; ++i) {
        if (unfoldable(d.body[i])) pos = i;
      }
      if (!pos) {
        done.push_back(d);
        continue;
      }
      auto res = unfold(d, *pos, opsem, fresh);
      record(trace, TraceStep::Unfold, d, *pos, res);
      work.insert(work.begin(), res.begin(), res.end());
    }
    std::stable_partition(done.begin(), done.end(),
                          [](const Clause& d) { return !reach_index(d).has_value(); });
    for (const auto& d : done) {
      auto idx = reach_index(d);
      Clause result = d;
      if (idx) {
        Clause flat = flatten_reach(d, *idx, fresh, slot_names);
        record(trace, TraceStep::Flatten, d, 0, {flat});
        std::vector<Var> hv = atom_vars({flat.body[*idx]});
        auto [name, is_new] = defs.lookup_or_define({flat.body[*idx]}, hv);
        if (is_new) {
          in.push_back(defs.definitions().back());
          record(trace, TraceStep::Define, defs.definitions().back(), 0,
                 {defs.definitions().back()});
        }
        result = flat;
        result.body[*idx] = var_atom(name, hv);
        record(trace, TraceStep::Fold, flat, 0, {result});
      }
      for (const auto& a : result.body) {
        if (kOpSemPreds.count(a.pred)) {
          throw TransformError("interpreter atom left after specialization: " + to_string(result));
        }
      }
      Clause pretty = prettify(result);
      record(trace, TraceStep::Emit, result, 0, {pretty});
      out.add(pretty);
    }
  }
  return out;
}

ClauseSet apply_ri(const ClauseSet& pc, TransformTrace* trace) {
  ClauseSet opsem, rest;
  opsem.directives() = pc.directives();
  auto rd = pc.directives().find(kRelationDirective);
  std::string rel = rd != pc.directives().end() && !rd->second.empty() ? rd->second[0] : "";
  for (const auto& c : pc) {
    bool interp = c.head && (kOpSemPreds.count(c.head->pred) || c.head->pred == rel);
    (interp ? opsem : rest).add(c);
  }
  ClauseSet out = remove_interpreter(opsem, trace);
  out.add_all(rest);
  return out;
}

ClauseSet linearize(const ClauseSet& lcls, const ClauseSet& gls, TransformTrace* trace,
                    LinStats* stats) {
  for (const auto& c : lcls) {
    if (!c.is_linear()) throw TransformError("nonlinear clause given as linear: " + to_string(c));
  }
  for (const auto& c : gls) {
    if (!c.is_goal()) throw TransformError("non-goal clause given as goal: " + to_string(c));
  }
  FreshVars fresh;
  reserve_set(fresh, lcls);
  reserve_set(fresh, gls);
  std::set<std::string> taken = lcls.predicates();
  for (const auto& p : gls.predicates()) taken.insert(p);
  DefsTable defs("new", false, taken);
  LinStats st;
  ClauseSet out;
  out.directives() = lcls.directives();
  for (const auto& c : lcls) {
    record(trace, TraceStep::Emit, c, 0, {c});
    out.add(c);
  }
  std::deque<Clause> nl;
  for (const auto& g : gls) {
    st.max_goal_atoms = std::max(st.max_goal_atoms, g.body.size());
    if (g.is_linear()) {
      record(trace, TraceStep::Emit, g, 0, {g});
      out.add(g);
    } else {
      nl.push_back(g);
    }
  }
  while (!nl.empty()) {
    Clause c = nl.front();
    nl.pop_front();
    std::vector<std::pair<Clause, size_t>> cur{{c, 0}};
    for (size_t step = 0; step < c.body.size(); ++step) {
      std::vector<std::pair<Clause, size_t>> next;
      for (const auto& [cl, p] : cur) {
        auto res = unfold(cl, p, lcls, fresh);
        record(trace, TraceStep::Unfold, cl, p, res);
        for (auto& r : res) {
          size_t np = p + r.body.size() + 1 - cl.body.size();
          next.emplace_back(std::move(r), np);
        }
      }
      cur = std::move(next);
    }
    for (const auto& entry : cur) {
      Clause s = simplify_clause(flatten(entry.first, fresh));
      record(trace, TraceStep::Simplify, entry.first, 0, {s});
      if (is_false(s.constraint)) continue;
      Clause result = s;
      if (!s.body.empty()) {
        std::vector<Var> hv;
        std::vector<Var> hc;
        if (s.head) s.head->collect_vars(hc);
        for (const auto& r : s.constraint) r.expr.collect_vars(hc);
        for (const auto& v : atom_vars(s.body)) {
          if (std::find(hc.begin(), hc.end(), v) != hc.end()) hv.push_back(v);
        }
        auto [name, is_new] = defs.lookup_or_define(s.body, hv);
        if (is_new) {
          const Clause& d = defs.definitions().back();
          st.max_definition_atoms = std::max(st.max_definition_atoms, d.body.size());
          nl.push_back(d);
          record(trace, TraceStep::Define, d, 0, {d});
        }
        result.body = {var_atom(name, hv)};
        record(trace, TraceStep::Fold, s, 0, {result});
      }
      Clause pretty = prettify(result);
      record(trace, TraceStep::Emit, result, 0, {pretty});
      out.add(pretty);
    }
  }
  st.definitions = defs.size();
  st.definition_clauses = defs.definitions();
  if (stats) *stats = st;
  return out;
}

ClauseSet apply_lin(const ClauseSet& cls, TransformTrace* trace, LinStats* stats) {
  ClauseSet lcls, gls;
  lcls.directives() = cls.directives();
  for (const auto& c : cls) (c.is_goal() ? gls : lcls).add(c);
  return linearize(lcls, gls, trace, stats);
}

}  // namespace hornlin
