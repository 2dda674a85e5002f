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

#include "hornlin/spec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hornlin/derive.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/linear.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {

namespace {

bool is_program_var(const Var& v) { return !v.empty() && std::islower(static_cast<unsigned char>(v[0])); }

void parse_header(ClauseParser& p, SpecTriple& t) {
  if (p.peek().kind == Token::Ident && p.peek().text == "triple") p.next();
  p.expect("{");
  std::set<Var> bound;
  if (!p.is_punct("}")) {
    do {
      const Token& tok = p.peek();
      if (tok.kind == Token::Ident && p.is_punct("=", 1)) {
        Var z = tok.text;
        p.next();
        p.next();
        Binding b;
        const Token& rhs = p.peek();
        if (rhs.kind == Token::Variable) {
          b.kind = Binding::Param;
          b.param = rhs.text;
          p.next();
        } else {
          LinExpr e = p.parse_expr(false);
          if (!e.is_int_const()) p.fail("binding must be a parameter or an integer constant");
          b.kind = Binding::Const;
          b.value = e.constant_term().get_num();
        }
        if (!bound.insert(z).second) {
          throw ParseError("program variable '" + z + "' bound twice", tok.line, tok.column);
        }
        t.bindings.emplace_back(z, b);
      } else if (tok.kind == Token::Ident && p.is_punct("(", 1)) {
        t.pre_atoms.push_back(p.parse_atom(false));
      } else {
        t.pre_constraint.push_back(p.parse_relation(false));
      }
    } while (p.accept(","));
  }
  p.expect("}");
  const Token& name = p.peek();
  if (name.kind != Token::Ident) p.fail("expected program name");
  t.program = name.text;
  p.next();
  p.expect("{");
  const Token& at = p.peek();
  Atom post = p.parse_atom(true);
  p.expect("}");
  if (post.args.empty()) throw ParseError("postcondition needs a result variable", at.line, at.column);
  t.f = post.pred;
  for (size_t i = 0; i < post.args.size(); ++i) {
    const Term& a = post.args[i];
    bool last = i + 1 == post.args.size();
    if (!a.is_var()) {
      throw ParseError("postcondition arguments must be variables", at.line, at.column);
    }
    if (last != is_program_var(a.var())) {
      throw ParseError(last ? "last postcondition argument must be a program variable"
                            : "postcondition parameters must be upper-case variables",
                       at.line, at.column);
    }
    if (last) {
      t.result_var = a.var();
    } else {
      t.params.push_back(a.var());
    }
  }
}

void partition(SpecTriple& t) {
  for (const auto& c : t.spec) {
    if (!c.head) throw SpecError("specification clause without head: " + to_string(c));
    if (c.head->pred == t.f) {
      t.fdef.add(c);
      continue;
    }
    for (const auto& a : c.body) {
      if (a.pred == t.f) {
        throw SpecError("'" + t.f + "' occurs in auxiliary clause: " + to_string(c));
      }
    }
    if (!c.is_linear()) throw SpecError("auxiliary clause is not linear: " + to_string(c));
    t.aux.add(c);
  }
  if (t.fdef.empty()) throw SpecError("no clause defines '" + t.f + "'");
  auto it = t.spec.signature().find(t.f);
  if (it != t.spec.signature().end() && it->second != t.params.size() + 1) {
    throw SpecError("postcondition arity differs from the clauses defining '" + t.f + "'");
  }
}

}  // namespace

const Binding* SpecTriple::binding_of(const Var& z) const {
  for (const auto& [v, b] : bindings) {
    if (v == z) return &b;
  }
  return nullptr;
}

SpecTriple parse_spec(const std::string& text) {
  std::map<std::string, std::vector<std::string>> directives;
  ClauseParser p(tokenize(text, &directives));
  SpecTriple t;
  parse_header(p, t);
  while (!p.at_end()) {
    for (const auto& c : p.parse_clause()) t.spec.add(c);
  }
  partition(t);
  return t;
}

void validate_spec(const SpecTriple& t, const ImpProgram& p) {
  auto known = [&](const Var& z) {
    return std::find(p.variables.begin(), p.variables.end(), z) != p.variables.end();
  };
  for (const auto& [z, b] : t.bindings) {
    (void)b;
    if (!known(z)) throw SpecError("unknown program variable '" + z + "' in the triple");
  }
  if (!known(t.result_var)) {
    throw SpecError("unknown result variable '" + t.result_var + "' in the triple");
  }
}

std::string triple_to_string(const SpecTriple& t) {
  std::vector<std::string> items;
  for (const auto& [z, b] : t.bindings) {
    items.push_back(z + "=" + (b.kind == Binding::Param ? b.param : b.value.get_str()));
  }
  for (const auto& r : t.pre_constraint) items.push_back(to_string(r));
  for (const auto& a : t.pre_atoms) items.push_back(to_string(a));
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
  os << "} " << t.program << " {" << t.f << "(";
  for (const auto& v : t.params) os << v << ",";
  os << t.result_var << ")}";
  return os.str();
}

FunctionalityReport check_functionality(const SpecTriple& t,
                                        const std::vector<std::vector<Int>>& samples,
                                        size_t depth) {
  FunctionalityReport rep;
  DeriveOptions opts;
  opts.depth = depth;
  for (const auto& s : samples) {
    if (s.size() != t.params.size()) throw SpecError("sample arity differs from the parameters");
    FunctionalityEntry e;
    e.params = s;
    Subst pin;
    for (size_t i = 0; i < s.size(); ++i) pin[t.params[i]] = LinExpr::constant(Rat(s[i]));
    Constraint pre;
    for (const auto& r : t.pre_constraint) pre.push_back(r.substitute(pin));
    std::vector<Atom> pre_atoms;
    for (const auto& a : t.pre_atoms) pre_atoms.push_back(a.substitute(pin));
    bool in_pre = false;
    Deriver pre_d(t.spec, opts);
    pre_d.run(pre, pre_atoms, [&](const DerivationLeaf&) {
      in_pre = true;
      return false;
    });
    if (!in_pre) {
      e.status = FunctionalityEntry::OutsidePre;
      rep.entries.push_back(e);
      continue;
    }
    Atom q{t.f, {}};
    for (const auto& v : s) q.args.push_back(LinExpr::constant(Rat(v)));
    const Var y = "Y";
    q.args.push_back(LinExpr::variable(y));
    std::set<Int> values;
    bool violation = false;
    Deriver d(t.spec, opts);
    d.run({}, {q}, [&](const DerivationLeaf& leaf) {
      const Term& term = leaf.answer.at(y);
      Int v = leaf.witness.at(y);
      for (const auto op : {RelOp::Gt, RelOp::Lt}) {
        Constraint other = leaf.constraint;
        other.push_back(LinRel::make(term, op, LinExpr::constant(Rat(v))));
        if (sat_z(other).kind == ZResult::Sat) violation = true;
      }
      values.insert(v);
      if (values.size() > 1) violation = true;
      return !violation;
    });
    e.values.assign(values.begin(), values.end());
    if (violation) {
      e.status = FunctionalityEntry::Violation;
      rep.uniqueness_violation = true;
    } else {
      e.status = values.empty() ? FunctionalityEntry::Unconfirmed : FunctionalityEntry::Unique;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace hornlin
