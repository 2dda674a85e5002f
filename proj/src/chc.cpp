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

#include "hornlin/chc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "hornlin/syntax.hpp"

namespace hornlin {

namespace {

Constraint normalize_constraint(const Constraint& c) {
  Constraint out;
  for (const auto& r : c) {
    if (r.is_ground()) {
      if (!r.ground_value()) return {LinRel::falsum()};
      continue;
    }
    out.push_back(r.normalized());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string constraint_key(const Constraint& c) {
  std::string s;
  for (const auto& r : c) s += to_string(r) + ";";
  return s;
}

// Name-independent description of the conjuncts mentioning `v`.
std::string signature(const Var& v, const Constraint& c, const std::map<Var, Var>& named) {
  std::vector<std::string> sigs;
  for (const auto& raw : c) {
    if (!raw.expr.mentions(v)) continue;
    LinRel r = raw.normalized();
    auto render = [&](const LinExpr& e) {
      std::vector<std::string> parts;
      for (const auto& [x, k] : e.coeffs()) {
        auto it = named.find(x);
        std::string label = it != named.end() ? it->second : (x == v ? "@" : "?");
        parts.push_back(k.get_str() + "*" + label);
      }
      std::sort(parts.begin(), parts.end());
      std::string s;
      for (auto& p : parts) s += p + " ";
      return s + "k" + e.constant_term().get_str() + " r" + std::to_string(static_cast<int>(r.rel));
    };
    std::string s = render(r.expr);
    if (r.rel == Rel::Eq) s = std::min(s, render(-r.expr));
    sigs.push_back(s);
  }
  std::sort(sigs.begin(), sigs.end());
  std::string out;
  for (auto& s : sigs) out += s + "|";
  return out;
}

}  // namespace

Var base_name(const Var& v) {
  Var b = v;
  while (true) {
    auto pos = b.rfind('_');
    if (pos == std::string::npos || pos == 0 || pos + 1 == b.size()) break;
    bool digits = std::all_of(b.begin() + pos + 1, b.end(),
                              [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (!digits) break;
    b = b.substr(0, pos);
  }
  return b;
}

Var FreshVars::next(const Var& base) {
  Var b = base_name(base);
  while (true) {
    Var cand = b + "_" + std::to_string(++counter_);
    if (reserved_.insert(cand).second) return cand;
  }
}

void FreshVars::reserve_all(const Clause& c) {
  for (const auto& v : c.vars()) reserved_.insert(v);
}

Clause rename_clause(const Clause& c, const std::map<Var, Var>& r) {
  Clause out;
  if (c.head) out.head = c.head->rename(r);
  for (const auto& rel : c.constraint) out.constraint.push_back(rel.rename(r));
  for (const auto& a : c.body) out.body.push_back(a.rename(r));
  return out;
}

Clause canonicalize(const Clause& c) {
  std::vector<Var> order;
  VarSet seen;
  {
    std::vector<Var> hb;
    if (c.head) c.head->collect_vars(hb);
    for (const auto& a : c.body) a.collect_vars(hb);
    for (const auto& v : hb) {
      if (seen.insert(v).second) order.push_back(v);
    }
  }
  std::map<Var, Var> named;
  for (size_t i = 0; i < order.size(); ++i) named[order[i]] = "V" + std::to_string(i);

  std::vector<Var> rest;
  for (const auto& r : c.constraint) {
    for (const auto& kv : r.expr.coeffs()) {
      if (seen.insert(kv.first).second) rest.push_back(kv.first);
    }
  }
  if (!rest.empty()) {
    std::vector<std::pair<std::string, Var>> keyed;
    for (const auto& v : rest) keyed.emplace_back(signature(v, c.constraint, named), v);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    // Tie groups of identical signatures.
    std::vector<std::vector<Var>> groups;
    for (size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.emplace_back();
      groups.back().push_back(keyed[i].second);
    }
    size_t combos = 1;
    for (auto& g : groups) {
      for (size_t k = 2; k <= g.size(); ++k) combos *= k;
      if (combos > 720) break;
    }
    size_t base = order.size();
    auto assign = [&](std::map<Var, Var>& m) {
      size_t k = base;
      for (auto& g : groups) {
        for (auto& v : g) m[v] = "V" + std::to_string(k++);
      }
    };
    if (combos > 1 && combos <= 720) {
      for (auto& g : groups) std::sort(g.begin(), g.end());
      std::string best;
      std::vector<std::vector<Var>> best_groups;
      std::function<void(size_t)> search = [&](size_t gi) {
        if (gi == groups.size()) {
          std::map<Var, Var> m = named;
          assign(m);
          Constraint rc;
          for (const auto& r : c.constraint) rc.push_back(r.rename(m));
          std::string key = constraint_key(normalize_constraint(rc));
          if (best_groups.empty() || key < best) {
            best = key;
            best_groups = groups;
          }
          return;
        }
        do {
          search(gi + 1);
        } while (std::next_permutation(groups[gi].begin(), groups[gi].end()));
      };
      search(0);
      groups = best_groups;
    }
    assign(named);
  }
  Clause out = rename_clause(c, named);
  out.constraint = normalize_constraint(out.constraint);
  return out;
}

std::string canonical_key(const Clause& c) { return to_string(canonicalize(c)); }

std::vector<std::string> canonical_keys(const ClauseSet& s) {
  std::vector<std::string> keys;
  keys.reserve(s.size());
  for (const auto& c : s) keys.push_back(canonical_key(c));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool canonically_equal(const ClauseSet& a, const ClauseSet& b) {
  return canonical_keys(a) == canonical_keys(b);
}

namespace {

class Unifier {
 public:
  Unifier(bool residue, const VarSet* prefer) : residue_(residue), prefer_(prefer) {}

  bool unify(const Term& t1, const Term& t2) {
    Term a = t1.substitute(bind_);
    Term b = t2.substitute(bind_);
    if (a == b) return true;
    bool va = a.is_var();
    bool vb = b.is_var();
    if (va && vb) {
      bool pa = prefer_ && prefer_->count(a.var());
      bool pb = prefer_ && prefer_->count(b.var());
      if (pb && !pa) {
        bind(b.var(), a);
      } else {
        bind(a.var(), b);
      }
      return true;
    }
    if (va && !b.mentions(a.var())) {
      bind(a.var(), b);
      return true;
    }
    if (vb && !a.mentions(b.var())) {
      bind(b.var(), a);
      return true;
    }
    if (a.is_constant() && b.is_constant()) return false;
    if (!residue_) return false;
    residual_.push_back(LinRel::make(a, RelOp::Eq, b));
    return true;
  }

  Subst& bindings() { return bind_; }

  Constraint residual() const {
    Constraint out;
    for (const auto& r : residual_) out.push_back(r.substitute(bind_));
    return out;
  }

 private:
  void bind(const Var& v, const Term& t) {
    Subst one{{v, t}};
    for (auto& kv : bind_) kv.second = kv.second.substitute(one);
    bind_[v] = t;
  }

  bool residue_;
  const VarSet* prefer_;
  Subst bind_;
  Constraint residual_;
};

}  // namespace

std::optional<Subst> unify_atoms(const Atom& a1, const Atom& a2) {
  if (a1.pred != a2.pred || a1.args.size() != a2.args.size()) return std::nullopt;
  Unifier u(false, nullptr);
  for (size_t i = 0; i < a1.args.size(); ++i) {
    if (!u.unify(a1.args[i], a2.args[i])) return std::nullopt;
  }
  return u.bindings();
}

std::optional<std::pair<Subst, Constraint>> unify_with_residue(const Atom& a1, const Atom& a2,
                                                               const VarSet& prefer) {
  if (a1.pred != a2.pred || a1.args.size() != a2.args.size()) return std::nullopt;
  Unifier u(true, &prefer);
  for (size_t i = 0; i < a1.args.size(); ++i) {
    if (!u.unify(a1.args[i], a2.args[i])) return std::nullopt;
  }
  return std::make_pair(u.bindings(), u.residual());
}

Clause apply_subst(const Clause& c, const Subst& s) {
  if (s.empty()) return c;
  Clause out;
  if (c.head) out.head = c.head->substitute(s);
  for (const auto& r : c.constraint) out.constraint.push_back(r.substitute(s));
  for (const auto& a : c.body) out.body.push_back(a.substitute(s));
  return out;
}

Clause rename_apart(const Clause& c, FreshVars& fresh) {
  std::map<Var, Var> r;
  for (const auto& v : c.vars()) r[v] = fresh.next(v);
  return rename_clause(c, r);
}

Clause flatten(const Clause& c, FreshVars& fresh) {
  Clause out = c;
  for (auto& a : out.body) {
    for (auto& t : a.args) {
      if (t.is_var()) continue;
      Var x = fresh.next("X");
      out.constraint.push_back(LinRel::make(LinExpr::variable(x), RelOp::Eq, t));
      t = LinExpr::variable(x);
    }
  }
  return out;
}

Clause flatten(const Clause& c) {
  FreshVars fresh;
  fresh.reserve_all(c);
  return flatten(c, fresh);
}

Clause prettify(const Clause& c) {
  std::vector<Var> order = c.vars();
  std::map<Var, Var> ren;
  VarSet used;
  for (const auto& v : order) {
    if (base_name(v) == v && used.insert(v).second) ren[v] = v;
  }
  for (const auto& v : order) {
    if (ren.count(v)) continue;
    Var b = base_name(v);
    Var cand = b;
    for (int k = 1; used.count(cand); ++k) cand = b + std::to_string(k);
    used.insert(cand);
    ren[v] = cand;
  }
  return rename_clause(c, ren);
}

}  // namespace hornlin
