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

#include "hornlin/encoder.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hornlin/chc.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/linear.hpp"

namespace hornlin {

namespace {

// Hands out clause-local variable names, suffixing a counter on clashes.
class NameSupply {
 public:
  Var take(const Var& base) {
    Var cand = base;
    for (int k = 1; used_.count(cand); ++k) cand = base + std::to_string(k);
    used_.insert(cand);
    return cand;
  }
  void reserve(const Var& v) { used_.insert(v); }

 private:
  std::set<Var> used_;
};

Var capitalize(const Var& z) {
  Var v = z;
  v[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])));
  return v;
}

LinExpr var(const Var& v) { return LinExpr::variable(v); }
LinExpr num(long long k) { return LinExpr::constant(Rat(static_cast<long>(k))); }

// Integer form of a relation: primitive coefficients, strict relations
// turned into non-strict ones.
LinRel tighten(const LinRel& r) {
  LinRel n = r.normalized();
  if (n.rel == Rel::Gt) {
    n.expr.add_constant(Rat(-1));
    n.rel = Rel::Ge;
  }
  return n;
}

struct Encoding {
  const ImpProgram& prog;
  const SpecTriple& spec;
  std::vector<Var> order;
  std::vector<Var> slots;

  Atom cf_atom(const std::string& pred, const LinExpr& label, const std::vector<LinExpr>& env,
               const std::vector<LinExpr>& extra) const {
    Atom a{pred, {label}};
    a.args.insert(a.args.end(), env.begin(), env.end());
    a.args.insert(a.args.end(), extra.begin(), extra.end());
    return a;
  }

  std::vector<LinExpr> env_vars(NameSupply& names, const std::string& suffix) const {
    std::vector<LinExpr> out;
    for (const auto& s : slots) out.push_back(var(names.take(s + suffix)));
    return out;
  }

  std::map<Var, Var> slot_renaming() const {
    std::map<Var, Var> r;
    for (size_t i = 0; i < order.size(); ++i) r[order[i]] = slots[i];
    return r;
  }

  Atom tr_atom(size_t from, const std::vector<LinExpr>& src, long long to,
               const std::vector<LinExpr>& dst) const {
    Atom a{"tr", {num(static_cast<long long>(from))}};
    a.args.insert(a.args.end(), src.begin(), src.end());
    a.args.push_back(num(to));
    a.args.insert(a.args.end(), dst.begin(), dst.end());
    return a;
  }
};

}  // namespace

std::vector<Var> env_order(const SpecTriple& t, const ImpProgram& p) {
  std::vector<Var> out;
  for (const auto& [z, b] : t.bindings) {
    (void)b;
    out.push_back(z);
  }
  for (const auto& z : p.variables) {
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  }
  return out;
}

ClauseSet encode_opsem(const ImpProgram& p, const SpecTriple& t) {
  if (!p.normalized) throw EncodeError("program must be normalized before encoding");
  validate_spec(t, p);
  Encoding enc{p, t, env_order(t, p), {}};
  {
    NameSupply slot_names;
    for (const auto& q : t.params) slot_names.reserve(q);
    for (const auto& z : enc.order) {
      const Binding* b = t.binding_of(z);
      enc.slots.push_back(b && b->kind == Binding::Param ? Var() : slot_names.take(capitalize(z)));
    }
    std::set<Var> used_params;
    for (size_t i = 0; i < enc.order.size(); ++i) {
      const Binding* b = t.binding_of(enc.order[i]);
      if (!b || b->kind != Binding::Param) continue;
      enc.slots[i] = used_params.insert(b->param).second ? b->param
                                                          : slot_names.take(capitalize(enc.order[i]));
    }
  }
  std::vector<LinExpr> env;
  for (const auto& s : enc.slots) env.push_back(var(s));
  std::vector<LinExpr> params;
  for (const auto& q : t.params) params.push_back(var(q));

  ClauseSet out;
  const std::string r = t.r_name();
  size_t h = p.halt_index();

  // Clause R.
  {
    NameSupply names;
    for (const auto& q : t.params) names.reserve(q);
    Var z = names.take("Z");
    Var l0 = names.take("L_0"), lh = names.take("L_1");
    auto e0 = enc.env_vars(names, "_0");
    auto eh = enc.env_vars(names, "_1");
    Clause c;
    c.head = Atom{r, params};
    c.head->args.push_back(var(z));
    c.body.push_back(enc.cf_atom("initCf", var(l0), e0, params));
    Atom reach{"reach", {var(l0)}};
    reach.args.insert(reach.args.end(), e0.begin(), e0.end());
    reach.args.push_back(var(lh));
    reach.args.insert(reach.args.end(), eh.begin(), eh.end());
    c.body.push_back(reach);
    c.body.push_back(enc.cf_atom("finalCf", var(lh), eh, {var(z)}));
    out.add(c);
  }
  // initCf.
  {
    Clause c;
    c.head = enc.cf_atom("initCf", num(0), env, params);
    c.constraint = t.pre_constraint;
    for (size_t i = 0; i < enc.order.size(); ++i) {
      const Binding* b = t.binding_of(enc.order[i]);
      if (!b) continue;
      if (b->kind == Binding::Const) {
        c.constraint.push_back(LinRel::make(env[i], RelOp::Eq, LinExpr::constant(Rat(b->value))));
      } else if (enc.slots[i] != b->param) {
        c.constraint.push_back(LinRel::make(env[i], RelOp::Eq, var(b->param)));
      }
    }
    c.body = t.pre_atoms;
    out.add(c);
  }
  // finalCf.
  {
    size_t k = static_cast<size_t>(
        std::find(enc.order.begin(), enc.order.end(), t.result_var) - enc.order.begin());
    Clause c;
    c.head = enc.cf_atom("finalCf", num(static_cast<long long>(h)), env, {env[k]});
    out.add(c);
  }
  // reach.
  {
    NameSupply names;
    for (const auto& s : enc.slots) names.reserve(s);
    Var l = names.take("L");
    Clause refl;
    refl.head = enc.cf_atom("reach", var(l), env, {});
    refl.head->args.push_back(var(l));
    refl.head->args.insert(refl.head->args.end(), env.begin(), env.end());
    out.add(refl);
    Var l1 = names.take("L1"), l2 = names.take("L2");
    auto e1 = enc.env_vars(names, "1");
    auto e2 = enc.env_vars(names, "2");
    auto pair = [&](const std::string& pred, const Var& a, const std::vector<LinExpr>& ea,
                    const Var& b, const std::vector<LinExpr>& eb) {
      Atom x = enc.cf_atom(pred, var(a), ea, {});
      x.args.push_back(var(b));
      x.args.insert(x.args.end(), eb.begin(), eb.end());
      return x;
    };
    Clause step;
    step.head = pair("reach", l, env, l2, e2);
    step.body.push_back(pair("tr", l, env, l1, e1));
    step.body.push_back(pair("reach", l1, e1, l2, e2));
    out.add(step);
  }
  // tr.
  auto ren = enc.slot_renaming();
  for (size_t i = 0; i < p.commands.size(); ++i) {
    const Command& cmd = p.commands[i];
    switch (cmd.kind) {
      case Command::Assign: {
        std::vector<LinExpr> dst = env;
        size_t j = static_cast<size_t>(
            std::find(enc.order.begin(), enc.order.end(), cmd.var) - enc.order.begin());
        dst[j] = cmd.expr.rename(ren);
        Clause c;
        c.head = enc.tr_atom(i, env, static_cast<long long>(i + 1), dst);
        out.add(c);
        break;
      }
      case Command::Goto: {
        Clause c;
        c.head = enc.tr_atom(i, env, static_cast<long long>(p.index_of(cmd.then_label)), env);
        out.add(c);
        break;
      }
      case Command::Ite: {
        LinRel guard = cmd.cond.rename(ren);
        Clause yes;
        yes.head = enc.tr_atom(i, env, static_cast<long long>(p.index_of(cmd.then_label)), env);
        yes.constraint = simplify_ground({tighten(guard)});
        if (!is_false(yes.constraint)) out.add(yes);
        for (const auto& neg : negate_over_z(guard)) {
          Clause no;
          no.head = enc.tr_atom(i, env, static_cast<long long>(p.index_of(cmd.else_label)), env);
          no.constraint = simplify_ground({tighten(neg)});
          if (!is_false(no.constraint)) out.add(no);
        }
        break;
      }
      case Command::Halt:
        break;
      default:
        throw EncodeError("unexpected structured command in a normalized program");
    }
  }
  std::vector<std::string> heads;
  for (size_t lh : loop_heads(p)) heads.push_back(std::to_string(lh));
  out.directives()[kNoUnfoldDirective] = heads;
  out.directives()[kRelationDirective] = {r};
  return out;
}

ClauseSet build_pcorr(const SpecTriple& t) {
  ClauseSet out;
  const std::string r = t.r_name();
  for (const auto& cl : t.fdef) {
    const Atom& head = *cl.head;
    if (head.pred != t.f || head.args.size() != t.params.size() + 1) {
      throw SpecError("clause does not define " + t.f + " with the postcondition arity");
    }
    std::vector<Term> xs(head.args.begin(), head.args.end() - 1);
    Term y = head.args.back();
    Constraint c = cl.constraint;
    std::vector<Atom> body;
    for (const auto& a : cl.body) body.push_back(Atom{a.pred == t.f ? r : a.pred, a.args});
    Var z;
    if (y.is_var()) {
      Var yv = y.var();
      bool elsewhere = std::any_of(xs.begin(), xs.end(), [&](const Term& x) { return x.mentions(yv); });
      for (const auto& a : body) {
        for (const auto& x : a.args) elsewhere = elsewhere || x.mentions(yv);
      }
      for (size_t i = 0; i < c.size() && !elsewhere; ++i) {
        const LinRel& rel = c[i];
        Rat a = rel.expr.coeff(yv);
        if (rel.rel != Rel::Eq || (a != 1 && a != -1)) continue;
        LinExpr rest = rel.expr;
        rest.add_term(yv, -a);
        Term def = rest * Rat(-1 / a);
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
        Subst s{{yv, def}};
        for (auto& q : c) q = q.substitute(s);
        y = def;
        z = yv;
        break;
      }
    }
    if (z.empty()) {
      NameSupply names;
      for (const auto& v : cl.vars()) names.reserve(v);
      z = names.take("Z");
    }
    Atom rz{r, xs};
    rz.args.push_back(var(z));
    for (const auto op : {RelOp::Gt, RelOp::Lt}) {
      Clause g;
      g.constraint = c;
      g.constraint.push_back(LinRel::make(var(z), op, y));
      g.body = body;
      g.body.push_back(rz);
      out.add(g);
    }
  }
  return out;
}

ClauseSet assemble_pc(const ClauseSet& opsem, const SpecTriple& t) {
  ClauseSet out;
  out.directives() = opsem.directives();
  std::set<std::string> seen;
  auto put = [&](const Clause& c) {
    if (seen.insert(canonical_key(c)).second) out.add(c);
  };
  const ClauseSet goals = build_pcorr(t);
  for (const ClauseSet* part : {&opsem, &t.aux}) {
    for (const auto& c : *part) {
      if (!c.is_goal()) put(c);
    }
  }
  for (const auto* part : {&opsem, &t.aux, &goals}) {
    for (const auto& c : *part) {
      if (c.is_goal()) put(c);
    }
  }
  return out;
}

}  // namespace hornlin
