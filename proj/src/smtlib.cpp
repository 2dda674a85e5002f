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

#include "hornlin/smtlib.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "hornlin/errors.hpp"

namespace hornlin {

namespace {

const std::set<std::string> kReserved = {
    "!",          "_",        "as",     "let",  "exists", "forall", "match", "par",
    "assert",     "check-sat", "declare-fun", "true", "false", "and", "or", "not",
    "=>",         "distinct", "ite",    "Int",  "Bool",   "Real"};

bool simple_symbol(const std::string& s) {
  static const std::string extra = "~!@$%^&*_-+=<>.?/";
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && extra.find(ch) == std::string::npos) {
      return false;
    }
  }
  return !kReserved.count(s);
}

std::string symbol(const std::string& s) { return simple_symbol(s) ? s : "|" + s + "|"; }

std::string numeral(const Rat& r) {
  if (!is_integer(r)) throw ClauseError("non-integer coefficient " + r.get_str());
  Int n = r.get_num();
  if (n >= 0) return n.get_str();
  Int m = -n;
  return "(- " + m.get_str() + ")";
}

std::string term(const LinExpr& e) {
  std::vector<std::string> parts;
  for (const auto& [v, c] : e.coeffs()) {
    if (c == 1) {
      parts.push_back(symbol(v));
    } else if (c == -1) {
      parts.push_back("(- " + symbol(v) + ")");
    } else {
      parts.push_back("(* " + numeral(c) + " " + symbol(v) + ")");
    }
  }
  if (e.constant_term() != 0 || parts.empty()) parts.push_back(numeral(e.constant_term()));
  if (parts.size() == 1) return parts[0];
  std::string out = "(+";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

std::string relation(const LinRel& r0) {
  LinRel r = r0.normalized();
  LinExpr lhs, rhs;
  for (const auto& [v, c] : r.expr.coeffs()) {
    if (c > 0) {
      lhs.add_term(v, c);
    } else {
      rhs.add_term(v, -c);
    }
  }
  const Rat& k = r.expr.constant_term();
  if (k > 0) lhs.add_constant(k);
  if (k < 0) rhs.add_constant(-k);
  const char* op = r.rel == Rel::Eq ? "=" : r.rel == Rel::Ge ? ">=" : ">";
  return std::string("(") + op + " " + term(lhs) + " " + term(rhs) + ")";
}

std::string application(const Atom& a) {
  if (a.args.empty()) return symbol(a.pred);
  std::string out = "(" + symbol(a.pred);
  for (const auto& t : a.args) out += " " + term(t);
  return out + ")";
}

// S-expression with source position.
struct Node {
  bool is_list = false;
  bool quoted = false;
  std::string text;
  std::vector<Node> items;
  int line = 1;
  int column = 1;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  std::optional<Node> read() {
    skip();
    if (i_ >= s_.size()) return std::nullopt;
    Node n;
    n.line = line_;
    n.column = col_;
    char ch = s_[i_];
    if (ch == '(') {
      advance();
      n.is_list = true;
      for (;;) {
        skip();
        if (i_ >= s_.size()) throw ParseError("unterminated list", n.line, n.column);
        if (s_[i_] == ')') {
          advance();
          break;
        }
        n.items.push_back(*read());
      }
    } else if (ch == ')') {
      throw ParseError("unexpected ')'", line_, col_);
    } else if (ch == '|' || ch == '"') {
      advance();
      while (i_ < s_.size() && s_[i_] != ch) {
        n.text += s_[i_];
        advance();
      }
      if (i_ >= s_.size()) throw ParseError("unterminated quoted token", n.line, n.column);
      advance();
      n.quoted = true;
    } else {
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) &&
             s_[i_] != '(' && s_[i_] != ')' && s_[i_] != ';') {
        n.text += s_[i_];
        advance();
      }
    }
    return n;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const Node& n, const std::string& msg) {
  throw ParseError(msg, n.line, n.column);
}

bool is_atom(const Node& n, const std::string& text) {
  return !n.is_list && !n.quoted && n.text == text;
}

bool is_numeral(const Node& n) {
  if (n.is_list || n.quoted || n.text.empty()) return false;
  for (char ch : n.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string sanitize(const std::string& s, bool upper) {
  std::string out;
  for (char ch : s) {
    out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ? ch : '_';
  }
  if (upper) {
    if (out.empty() || !std::isupper(static_cast<unsigned char>(out[0]))) out = "V_" + out;
  } else if (out.empty() || !std::islower(static_cast<unsigned char>(out[0]))) {
    out = "p_" + out;
  }
  return out;
}

class ScriptParser {
 public:
  ClauseSet run(const std::string& text) {
    Reader rd(text);
    while (auto n = rd.read()) command(*n);
    return std::move(out_);
  }

 private:
  void command(const Node& n) {
    if (!n.is_list || n.items.empty() || n.items[0].is_list) fail(n, "expected a command");
    const std::string& head = n.items[0].text;
    if (head == "set-logic") {
      if (n.items.size() != 2 || !is_atom(n.items[1], "HORN")) {
        fail(n, "only the HORN logic is supported");
      }
    } else if (head == "set-info" || head == "set-option" || head == "check-sat" ||
               head == "get-model" || head == "exit") {
    } else if (head == "declare-fun") {
      declare(n);
    } else if (head == "assert") {
      if (n.items.size() != 2) fail(n, "assert takes one formula");
      assertion(n.items[1]);
    } else {
      fail(n.items[0], "unsupported command " + head);
    }
  }

  void declare(const Node& n) {
    if (n.items.size() != 4 || n.items[1].is_list || !n.items[2].is_list) {
      fail(n, "malformed declare-fun");
    }
    const std::string& name = n.items[1].text;
    for (const auto& s : n.items[2].items) {
      if (!is_atom(s, "Int")) {
        fail(s, "unsupported sort " + (s.is_list ? std::string("(...)") : s.text));
      }
    }
    if (!is_atom(n.items[3], "Bool")) fail(n.items[3], "relation must have sort Bool");
    if (preds_.count(name)) fail(n.items[1], "predicate " + name + " declared twice");
    std::string mapped = sanitize(name, false);
    while (used_preds_.count(mapped)) mapped += "_";
    used_preds_.insert(mapped);
    preds_[name] = {mapped, n.items[2].items.size()};
    out_.declare(mapped, n.items[2].items.size());
  }

  void assertion(const Node& f) {
    vars_.clear();
    const Node* body = &f;
    if (f.is_list && !f.items.empty() && is_atom(f.items[0], "forall")) {
      if (f.items.size() != 3 || !f.items[1].is_list) fail(f, "malformed forall");
      std::set<Var> taken;
      for (const auto& b : f.items[1].items) {
        if (!b.is_list || b.items.size() != 2 || b.items[0].is_list) fail(b, "malformed binding");
        if (!is_atom(b.items[1], "Int")) {
          fail(b.items[1], "unsupported sort " +
                               (b.items[1].is_list ? std::string("(...)") : b.items[1].text));
        }
        Var v = sanitize(b.items[0].text, true);
        while (taken.count(v)) v += "_";
        taken.insert(v);
        vars_[b.items[0].text] = v;
      }
      body = &f.items[2];
    }
    Clause c;
    if (body->is_list && !body->items.empty() && is_atom(body->items[0], "=>")) {
      if (body->items.size() != 3) fail(*body, "implication takes two arguments");
      conjunction(body->items[1], c);
      const Node& h = body->items[2];
      if (!is_atom(h, "false")) c.head = app(h);
    } else if (body->is_list && !body->items.empty() && is_atom(body->items[0], "not")) {
      if (body->items.size() != 2) fail(*body, "not takes one argument");
      conjunction(body->items[1], c);
    } else {
      c.head = app(*body);
    }
    out_.add(c);
  }

  void conjunction(const Node& n, Clause& c) {
    if (is_atom(n, "true")) return;
    if (n.is_list && !n.items.empty() && is_atom(n.items[0], "and")) {
      for (size_t i = 1; i < n.items.size(); ++i) conjunction(n.items[i], c);
      return;
    }
    if (n.is_list && !n.items.empty() && !n.items[0].is_list) {
      static const std::map<std::string, RelOp> ops = {
          {"=", RelOp::Eq}, {">=", RelOp::Ge}, {">", RelOp::Gt}, {"<=", RelOp::Le}, {"<", RelOp::Lt}};
      auto it = ops.find(n.items[0].text);
      if (it != ops.end() && !n.items[0].quoted) {
        if (n.items.size() != 3) fail(n, "relation takes two arguments");
        c.constraint.push_back(LinRel::make(expr(n.items[1]), it->second, expr(n.items[2])));
        return;
      }
    }
    c.body.push_back(app(n));
  }

  Atom app(const Node& n) {
    const Node& name = n.is_list ? (n.items.empty() ? n : n.items[0]) : n;
    if (name.is_list || (n.is_list && n.items.empty())) fail(n, "expected a predicate application");
    auto it = preds_.find(name.text);
    if (it == preds_.end()) fail(name, "undeclared predicate " + name.text);
    Atom a{it->second.first, {}};
    size_t given = n.is_list ? n.items.size() - 1 : 0;
    if (given != it->second.second) fail(n, "wrong number of arguments for " + name.text);
    for (size_t i = 1; n.is_list && i < n.items.size(); ++i) a.args.push_back(expr(n.items[i]));
    return a;
  }

  LinExpr expr(const Node& n) {
    if (!n.is_list) {
      if (is_numeral(n)) return LinExpr::constant(Rat(Int(n.text)));
      auto it = vars_.find(n.text);
      if (it == vars_.end()) fail(n, "unbound symbol " + n.text);
      return LinExpr::variable(it->second);
    }
    if (n.items.empty() || n.items[0].is_list) fail(n, "expected an arithmetic term");
    const std::string& op = n.items[0].text;
    if (op == "+") {
      LinExpr e;
      for (size_t i = 1; i < n.items.size(); ++i) e += expr(n.items[i]);
      return e;
    }
    if (op == "-") {
      if (n.items.size() < 2) fail(n, "'-' needs an argument");
      LinExpr e = expr(n.items[1]);
      if (n.items.size() == 2) return -e;
      for (size_t i = 2; i < n.items.size(); ++i) e -= expr(n.items[i]);
      return e;
    }
    if (op == "*") {
      LinExpr e = LinExpr::constant(Rat(1));
      for (size_t i = 1; i < n.items.size(); ++i) {
        LinExpr f = expr(n.items[i]);
        if (f.is_constant()) {
          e *= f.constant_term();
        } else if (e.is_constant()) {
          f *= e.constant_term();
          e = f;
        } else {
          fail(n, "nonlinear product");
        }
      }
      return e;
    }
    fail(n.items[0], "unsupported operator " + op);
  }

  ClauseSet out_;
  std::map<std::string, std::pair<std::string, size_t>> preds_;
  std::set<std::string> used_preds_;
  std::map<std::string, Var> vars_;
};

}  // namespace

std::string emit_smtlib(const ClauseSet& s) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  auto note = [&](const Atom& a) {
    if (seen.insert(a.pred).second) order.push_back(a.pred);
  };
  for (const auto& c : s) {
    if (c.head) note(*c.head);
    for (const auto& b : c.body) note(b);
  }
  for (const auto& [p, n] : s.signature()) {
    if (seen.insert(p).second) order.push_back(p);
  }
  std::ostringstream os;
  os << "(set-logic HORN)\n";
  for (const auto& p : order) {
    os << "(declare-fun " << symbol(p) << " (";
    size_t n = s.signature().at(p);
    for (size_t i = 0; i < n; ++i) os << (i ? " Int" : "Int");
    os << ") Bool)\n";
  }
  for (const auto& c : s) {
    std::vector<std::string> items;
    for (const auto& r : c.constraint) items.push_back(relation(r));
    for (const auto& b : c.body) items.push_back(application(b));
    std::string ante;
    if (items.empty()) {
      ante = "true";
    } else if (items.size() == 1) {
      ante = items[0];
    } else {
      ante = "(and";
      for (const auto& it : items) ante += " " + it;
      ante += ")";
    }
    std::string f = "(=> " + ante + " " + (c.head ? application(*c.head) : "false") + ")";
    std::vector<Var> vs = c.vars();
    if (!vs.empty()) {
      std::string binds;
      for (const auto& v : vs) binds += (binds.empty() ? "(" : " (") + symbol(v) + " Int)";
      f = "(forall (" + binds + ") " + f + ")";
    }
    os << "(assert " << f << ")\n";
  }
  os << "(check-sat)\n";
  return os.str();
}

ClauseSet parse_smtlib(const std::string& text) { return ScriptParser().run(text); }

}  // namespace hornlin
