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

#include "hornlin/imp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "hornlin/errors.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin {

namespace {

const std::set<std::string> kKeywords = {"while", "if", "else", "goto", "halt", "skip"};

class ImpParser {
 public:
  explicit ImpParser(const std::string& text)
      : toks_(tokenize(text, nullptr)), p_(toks_) {}

  ImpProgram parse() {
    ImpProgram prog;
    prog.commands = parse_block(false);
    prog.variables = vars_;
    return prog;
  }

 private:
  std::vector<Command> parse_block(bool braced) {
    std::vector<Command> out;
    while (!(braced ? p_.is_punct("}") : p_.at_end())) {
      if (p_.at_end()) p_.fail("expected '}'");
      out.push_back(parse_statement());
      while (p_.accept(";")) {
      }
    }
    return out;
  }

  bool at_label() const {
    const Token& t = p_.peek();
    return (t.kind == Token::Ident || t.kind == Token::Number) && p_.is_punct(":", 1) &&
           !kKeywords.count(t.text);
  }

  std::string parse_label_ref() {
    const Token& t = p_.peek();
    if (t.kind != Token::Ident && t.kind != Token::Number) p_.fail("expected label");
    if (kKeywords.count(t.text)) p_.fail("keyword used as label");
    std::string s = t.text;
    p_.next();
    return s;
  }

  void note_vars(size_t from) {
    for (size_t i = from; i < p_.position(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == Token::Variable) {
        throw ParseError("program variables must start with a lower-case letter", t.line,
                         t.column);
      }
      if (t.kind == Token::Ident && !kKeywords.count(t.text) && seen_.insert(t.text).second) {
        vars_.push_back(t.text);
      }
    }
  }

  LinExpr parse_int_expr() {
    size_t from = p_.position();
    LinExpr e = p_.parse_expr(true);
    for (const auto& [v, q] : e.coeffs()) {
      (void)v;
      if (!is_integer(q)) p_.fail("non-integer coefficient");
    }
    if (!is_integer(e.constant_term())) p_.fail("non-integer constant");
    note_vars(from);
    return e;
  }

  void parse_cond(Command& c) {
    bool paren = p_.accept("(");
    LinExpr lhs = parse_int_expr();
    RelOp op = RelOp::Eq;
    c.negated = false;
    if (p_.accept("!=")) {
      c.negated = true;
    } else if (p_.is_punct("=")) {
      p_.next();
      p_.accept("=");
    } else {
      op = p_.parse_relop();
    }
    LinExpr rhs = parse_int_expr();
    c.cond = LinRel::make(lhs, op, rhs);
    if (paren) p_.expect(")");
  }

  Command parse_statement() {
    Command c;
    c.line = p_.peek().line;
    while (at_label()) {
      c.labels.push_back(p_.peek().text);
      p_.next();
      p_.expect(":");
    }
    const Token& t = p_.peek();
    if (t.kind == Token::Punct && t.text == "{") {
      p_.next();
      Command blk;
      blk.kind = Command::If;
      blk.labels = c.labels;
      blk.line = c.line;
      blk.cond = LinRel::make(LinExpr::constant(0), RelOp::Eq, LinExpr::constant(0));
      blk.body = parse_block(true);
      p_.expect("}");
      return blk;
    }
    if (t.kind != Token::Ident) p_.fail("expected statement");
    std::string kw = t.text;
    if (kw == "halt") {
      p_.next();
      c.kind = Command::Halt;
    } else if (kw == "skip") {
      p_.next();
      c.kind = Command::Skip;
    } else if (kw == "goto") {
      p_.next();
      c.kind = Command::Goto;
      c.then_label = parse_label_ref();
    } else if (kw == "while") {
      p_.next();
      c.kind = Command::While;
      parse_cond(c);
      c.body = parse_body();
    } else if (kw == "if") {
      p_.next();
      parse_cond(c);
      if (p_.peek().kind == Token::Ident && p_.peek().text == "goto") {
        p_.next();
        c.kind = Command::Ite;
        c.then_label = parse_label_ref();
        if (p_.peek().kind == Token::Ident && p_.peek().text == "else") {
          p_.next();
          if (!(p_.peek().kind == Token::Ident && p_.peek().text == "goto")) {
            p_.fail("expected 'goto' after 'else'");
          }
          p_.next();
          c.else_label = parse_label_ref();
        }
      } else {
        c.kind = Command::If;
        c.body = parse_body();
        if (p_.peek().kind == Token::Ident && p_.peek().text == "else") {
          p_.next();
          c.orelse = parse_body();
        }
      }
    } else if (kw == "else") {
      p_.fail("'else' without 'if'");
    } else {
      size_t from = p_.position();
      c.kind = Command::Assign;
      c.var = kw;
      p_.next();
      note_vars(from);
      p_.expect("=");
      c.expr = parse_int_expr();
    }
    return c;
  }

  std::vector<Command> parse_body() {
    if (p_.accept("{")) {
      auto b = parse_block(true);
      p_.expect("}");
      return b;
    }
    std::vector<Command> one{parse_statement()};
    return one;
  }

  std::vector<Token> toks_;
  ClauseParser p_;
  std::vector<Var> vars_;
  std::set<Var> seen_;
};

void walk(const std::vector<Command>& cs, const std::function<void(const Command&)>& f) {
  for (const auto& c : cs) {
    f(c);
    walk(c.body, f);
    walk(c.orelse, f);
  }
}

void validate(const ImpProgram& p) {
  std::set<std::string> labels;
  int halts = 0;
  walk(p.commands, [&](const Command& c) {
    for (const auto& l : c.labels) {
      if (!labels.insert(l).second) throw ParseError("duplicate label '" + l + "'", c.line, 1);
    }
    if (c.kind == Command::Halt && ++halts > 1) {
      throw ParseError("multiple halt commands", c.line, 1);
    }
  });
  if (halts == 0) throw ParseError("missing halt command", 1, 1);
  walk(p.commands, [&](const Command& c) {
    for (const auto* l : {&c.then_label, &c.else_label}) {
      if ((c.kind == Command::Goto || c.kind == Command::Ite) && !l->empty() &&
          !labels.count(*l)) {
        throw ParseError("unknown jump target '" + *l + "'", c.line, 1);
      }
    }
  });
  const Command& last = p.commands.back();
  bool closed = last.kind == Command::Halt || last.kind == Command::Goto ||
                (last.kind == Command::Ite && !last.else_label.empty());
  if (!closed) throw ParseError("control falls off the end of the program", last.line, 1);
}

class Lowering {
 public:
  std::vector<Command> out;

  void lower(const std::vector<Command>& cs) {
    for (const auto& c : cs) lower(c);
  }

  void finish() {
    if (!pending_.empty()) throw Error("internal: dangling labels after lowering");
  }

 private:
  std::string fresh() { return "#" + std::to_string(gen_++); }

  void emit(Command c) {
    c.labels = pending_;
    pending_.clear();
    c.body.clear();
    c.orelse.clear();
    out.push_back(std::move(c));
  }

  Command jump(const LinRel& cond, bool negated, std::string then_l, std::string else_l,
               int line) {
    Command j;
    j.kind = Command::Ite;
    j.cond = cond;
    j.line = line;
    j.then_label = negated ? else_l : then_l;
    j.else_label = negated ? then_l : else_l;
    return j;
  }

  void lower(const Command& c) {
    pending_.insert(pending_.end(), c.labels.begin(), c.labels.end());
    switch (c.kind) {
      case Command::Skip:
        return;
      case Command::Assign:
      case Command::Goto:
      case Command::Halt:
        emit(c);
        return;
      case Command::Ite: {
        std::string els = c.else_label.empty() ? fresh() : c.else_label;
        emit(jump(c.cond, c.negated, c.then_label, els, c.line));
        if (c.else_label.empty()) pending_.push_back(els);
        return;
      }
      case Command::While: {
        std::string head = fresh(), body = fresh(), exit = fresh();
        pending_.push_back(head);
        emit(jump(c.cond, c.negated, body, exit, c.line));
        pending_.push_back(body);
        lower(c.body);
        Command back;
        back.kind = Command::Goto;
        back.then_label = head;
        back.line = c.line;
        emit(back);
        pending_.push_back(exit);
        return;
      }
      case Command::If: {
        if (c.cond.is_ground() && c.cond.ground_value() && !c.negated && c.orelse.empty()) {
          lower(c.body);
          return;
        }
        std::string then_l = fresh(), else_l = fresh(), end = fresh();
        bool has_else = !c.orelse.empty();
        emit(jump(c.cond, c.negated, then_l, has_else ? else_l : end, c.line));
        pending_.push_back(then_l);
        lower(c.body);
        if (has_else) {
          Command skip_else;
          skip_else.kind = Command::Goto;
          skip_else.then_label = end;
          skip_else.line = c.line;
          emit(skip_else);
          pending_.push_back(else_l);
          lower(c.orelse);
        }
        pending_.push_back(end);
        return;
      }
    }
  }

  std::vector<std::string> pending_;
  int gen_ = 0;
};

bool is_generated(const std::string& l) { return !l.empty() && l[0] == '#'; }

}  // namespace

size_t ImpProgram::halt_index() const {
  for (size_t i = 0; i < commands.size(); ++i) {
    if (commands[i].kind == Command::Halt) return i;
  }
  throw Error("program has no halt command");
}

size_t ImpProgram::index_of(const std::string& label) const {
  auto it = label_index.find(label);
  if (it == label_index.end()) throw Error("unknown label '" + label + "'");
  return it->second;
}

ImpProgram parse_imp(const std::string& text) {
  ImpProgram p = ImpParser(text).parse();
  if (p.commands.empty()) throw ParseError("empty program", 1, 1);
  validate(p);
  walk(p.commands, [&](const Command& c) {
    if (c.kind != Command::Goto && c.kind != Command::Ite) return;
    for (const auto* l : {&c.then_label, &c.else_label}) {
      if (!l->empty()) p.source_targets.insert(*l);
    }
  });
  return p;
}

ImpProgram normalize_jumps(const ImpProgram& p) {
  if (p.normalized) return p;
  Lowering lw;
  lw.lower(p.commands);
  lw.finish();
  ImpProgram q;
  q.variables = p.variables;
  q.source_targets = p.source_targets;
  q.normalized = true;
  q.commands = std::move(lw.out);
  std::map<std::string, size_t> where;
  std::set<std::string> user;
  for (size_t i = 0; i < q.commands.size(); ++i) {
    for (const auto& l : q.commands[i].labels) {
      where[l] = i;
      if (!is_generated(l)) user.insert(l);
    }
  }
  for (size_t i = 0; i < q.commands.size(); ++i) {
    auto& ls = q.commands[i].labels;
    std::vector<std::string> kept;
    for (const auto& l : ls) {
      if (!is_generated(l)) kept.push_back(l);
    }
    if (kept.empty()) {
      std::string name = "L" + std::to_string(i);
      while (user.count(name)) name += "_";
      kept.push_back(name);
    }
    ls = kept;
  }
  for (auto& c : q.commands) {
    for (auto* t : {&c.then_label, &c.else_label}) {
      if (!t->empty()) *t = q.commands[where.at(*t)].labels.front();
    }
  }
  for (size_t i = 0; i < q.commands.size(); ++i) {
    for (const auto& l : q.commands[i].labels) q.label_index[l] = i;
  }
  return q;
}

std::vector<size_t> loop_heads(const ImpProgram& q) {
  if (!q.normalized) throw EncodeError("loop_heads requires a normalized program");
  std::set<size_t> heads;
  for (size_t i = 0; i < q.commands.size(); ++i) {
    const Command& c = q.commands[i];
    if (c.kind != Command::Goto && c.kind != Command::Ite) continue;
    for (const auto* t : {&c.then_label, &c.else_label}) {
      if (t->empty()) continue;
      size_t j = q.index_of(*t);
      if (j <= i) heads.insert(j);
    }
  }
  for (const auto& l : q.source_targets) heads.insert(q.index_of(l));
  return {heads.begin(), heads.end()};
}

InterpResult interpret(const ImpProgram& prog, const IntEnv& env, size_t max_steps) {
  const ImpProgram q = prog.normalized ? prog : normalize_jumps(prog);
  InterpResult r;
  for (const auto& v : q.variables) {
    auto it = env.find(v);
    r.env[v] = it == env.end() ? Int(0) : it->second;
  }
  size_t pc = 0;
  for (;;) {
    const Command& c = q.commands.at(pc);
    if (c.kind == Command::Halt) {
      r.halted = true;
      return r;
    }
    if (r.steps >= max_steps) return r;
    ++r.steps;
    switch (c.kind) {
      case Command::Assign:
        r.env[c.var] = c.expr.eval(r.env).get_num();
        ++pc;
        break;
      case Command::Goto:
        pc = q.index_of(c.then_label);
        break;
      case Command::Ite:
        pc = q.index_of(c.cond.holds(r.env) ? c.then_label : c.else_label);
        break;
      default:
        throw Error("interpret: unexpected structured command");
    }
  }
}

namespace {

void print_commands(std::ostringstream& os, const std::vector<Command>& cs, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  for (const auto& c : cs) {
    os << pad;
    for (const auto& l : c.labels) os << l << ": ";
    std::string cond = c.negated ? "!(" + to_string(c.cond) + ")" : to_string(c.cond);
    switch (c.kind) {
      case Command::Assign:
        os << c.var << " = " << to_string(c.expr) << ";\n";
        break;
      case Command::Ite:
        os << "if (" << cond << ") goto " << c.then_label;
        if (!c.else_label.empty()) os << " else goto " << c.else_label;
        os << ";\n";
        break;
      case Command::Goto:
        os << "goto " << c.then_label << ";\n";
        break;
      case Command::Halt:
        os << "halt;\n";
        break;
      case Command::Skip:
        os << "skip;\n";
        break;
      case Command::While:
        os << "while (" << cond << ") {\n";
        print_commands(os, c.body, indent + 1);
        os << pad << "}\n";
        break;
      case Command::If:
        os << "if (" << cond << ") {\n";
        print_commands(os, c.body, indent + 1);
        os << pad << "}";
        if (!c.orelse.empty()) {
          os << " else {\n";
          print_commands(os, c.orelse, indent + 1);
          os << pad << "}";
        }
        os << "\n";
        break;
    }
  }
}

}  // namespace

std::string to_string(const ImpProgram& p) {
  std::ostringstream os;
  print_commands(os, p.commands, 0);
  return os.str();
}

}  // namespace hornlin
