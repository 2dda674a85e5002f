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

#include "hornlin/syntax.hpp"

#include <cctype>
#include <sstream>

#include "hornlin/errors.hpp"

namespace hornlin {

namespace {

void append_term(std::string& out, const Rat& c, const std::string& v) {
  Rat a = c;
  if (a < 0) {
    out += "-";
    a = -a;
  } else if (!out.empty()) {
    out += "+";
  }
  if (a != 1) out += a.get_str() + "*";
  out += v;
}

std::string sum_string(const std::vector<std::pair<Var, Rat>>& terms, const Rat& k) {
  std::string out;
  for (const auto& [v, c] : terms) append_term(out, c, v);
  if (out.empty()) return k.get_str();
  if (k > 0) out += "+" + k.get_str();
  if (k < 0) out += k.get_str();
  return out;
}

Int denominator_lcm(const LinExpr& e) {
  Int l = 1;
  for (const auto& kv : e.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kv.second.get_den_mpz_t());
  }
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.constant_term().get_den_mpz_t());
  return l;
}

}  // namespace

std::string to_string(const LinExpr& e) {
  std::vector<std::pair<Var, Rat>> terms(e.coeffs().begin(), e.coeffs().end());
  return sum_string(terms, e.constant_term());
}

std::string to_string(const LinRel& r) {
  LinExpr e = r.expr * Rat(denominator_lcm(r.expr));
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& kv : e.coeffs()) (kv.second > 0 ? has_pos : has_neg) = true;
  bool flipped = false;
  if (!has_pos && has_neg) {
    e = -e;
    flipped = true;
  }
  std::vector<std::pair<Var, Rat>> lhs;
  std::vector<std::pair<Var, Rat>> rhs;
  for (const auto& [v, c] : e.coeffs()) {
    if (c > 0) {
      lhs.emplace_back(v, c);
    } else {
      rhs.emplace_back(v, -c);
    }
  }
  std::string op;
  switch (r.rel) {
    case Rel::Eq:
      op = "=";
      break;
    case Rel::Ge:
      op = flipped ? "=<" : ">=";
      break;
    case Rel::Gt:
      op = flipped ? "<" : ">";
      break;
  }
  if (lhs.empty()) return e.constant_term().get_str() + op + "0";
  return sum_string(lhs, 0) + op + sum_string(rhs, -e.constant_term());
}

std::string to_string(const Constraint& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c[i]);
  }
  return out.empty() ? "true" : out;
}

std::string to_string(const Atom& a) {
  std::string out = a.pred;
  if (a.args.empty()) return out;
  out += "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(a.args[i]);
  }
  return out + ")";
}

std::string to_string(const Clause& c) {
  std::string out = c.head ? to_string(*c.head) : "false";
  if (c.constraint.empty() && c.body.empty()) return out + ".";
  out += " :- ";
  bool first = true;
  for (const auto& r : c.constraint) {
    if (!first) out += ", ";
    out += to_string(r);
    first = false;
  }
  for (const auto& a : c.body) {
    if (!first) out += ", ";
    out += to_string(a);
    first = false;
  }
  return out + ".";
}

std::string to_string(const ClauseSet& s) {
  std::string out;
  for (const auto& [k, vals] : s.directives()) {
    out += "%@ " + k;
    for (const auto& v : vals) out += " " + v;
    out += "\n";
  }
  for (const auto& c : s) out += to_string(c) + "\n";
  return out;
}

std::vector<Token> tokenize(const std::string& text,
                            std::map<std::string, std::vector<std::string>>* directives) {
  static const char* kPuncts[] = {":-", "=<", ">=", "<=", "!=", "=", "<", ">", "(", ")",
                                  ",",  ".",  ";",  "+",  "-",  "*", "/", "{", "}", ":"};
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '%') {
      size_t end = text.find('\n', i);
      if (end == std::string::npos) end = text.size();
      if (directives && i + 1 < text.size() && text[i + 1] == '@') {
        std::istringstream words(text.substr(i + 2, end - i - 2));
        std::string key;
        if (words >> key) {
          auto& vals = (*directives)[key];
          std::string v;
          while (words >> v) vals.push_back(v);
        }
      }
      advance(end - i);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Number;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      t.text = text.substr(i, j - i);
      t.kind = (std::isupper(static_cast<unsigned char>(ch)) || ch == '_') ? Token::Variable
                                                                           : Token::Ident;
      advance(j - i);
    } else {
      bool matched = false;
      for (const char* p : kPuncts) {
        size_t n = std::char_traits<char>::length(p);
        if (text.compare(i, n, p) == 0) {
          t.kind = Token::Punct;
          t.text = p;
          advance(n);
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
      }
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& ClauseParser::peek(size_t ahead) const {
  size_t k = pos_ + ahead;
  return k < toks_.size() ? toks_[k] : toks_.back();
}

const Token& ClauseParser::next() {
  const Token& t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool ClauseParser::is_punct(const std::string& punct, size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Punct && t.text == punct;
}

bool ClauseParser::accept(const std::string& punct) {
  if (!is_punct(punct)) return false;
  next();
  return true;
}

void ClauseParser::expect(const std::string& punct) {
  if (!accept(punct)) fail("expected '" + punct + "'");
}

void ClauseParser::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string found = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(msg + ", found " + found, t.line, t.column);
}

std::vector<Clause> ClauseParser::parse_clause() {
  std::optional<Atom> head;
  if (peek().kind == Token::Ident && peek().text == "false") {
    next();
  } else if (!is_punct(":-")) {
    head = parse_atom();
  }
  std::vector<Alt> alts{Alt{}};
  if (!accept(".")) {
    expect(":-");
    alts = parse_disj();
    expect(".");
  }
  std::vector<Clause> out;
  for (auto& a : alts) out.push_back(Clause{head, std::move(a.constraint), std::move(a.atoms)});
  return out;
}

std::vector<ClauseParser::Alt> ClauseParser::parse_disj() {
  std::vector<Alt> alts = parse_conj();
  while (accept(";")) {
    auto more = parse_conj();
    alts.insert(alts.end(), more.begin(), more.end());
  }
  return alts;
}

std::vector<ClauseParser::Alt> ClauseParser::parse_conj() {
  std::vector<Alt> acc{Alt{}};
  do {
    auto items = parse_item();
    std::vector<Alt> prod;
    for (const auto& a : acc) {
      for (const auto& b : items) {
        Alt c = a;
        c.constraint.insert(c.constraint.end(), b.constraint.begin(), b.constraint.end());
        c.atoms.insert(c.atoms.end(), b.atoms.begin(), b.atoms.end());
        prod.push_back(std::move(c));
      }
    }
    acc = std::move(prod);
  } while (accept(","));
  return acc;
}

std::vector<ClauseParser::Alt> ClauseParser::parse_item() {
  const Token& t = peek();
  if (t.kind == Token::Ident && !is_punct("(", 1)) {
    if (t.text == "true") {
      next();
      return {Alt{}};
    }
    if (t.text == "false") {
      next();
      return {Alt{{LinRel::falsum()}, {}}};
    }
  }
  if (t.kind == Token::Ident) return {Alt{{}, {parse_atom()}}};
  if (is_punct("(")) {
    size_t save = pos_;
    try {
      return {Alt{{parse_relation()}, {}}};
    } catch (const ParseError&) {
      reset(save);
    }
    next();
    auto alts = parse_disj();
    expect(")");
    return alts;
  }
  return {Alt{{parse_relation()}, {}}};
}

LinExpr ClauseParser::parse_expr(bool idents_are_vars) {
  LinExpr e;
  if (accept("+")) {
    e = parse_term(idents_are_vars);
  } else if (accept("-")) {
    e = -parse_term(idents_are_vars);
  } else {
    e = parse_term(idents_are_vars);
  }
  while (true) {
    if (accept("+")) {
      e += parse_term(idents_are_vars);
    } else if (accept("-")) {
      e -= parse_term(idents_are_vars);
    } else {
      break;
    }
  }
  return e;
}

LinExpr ClauseParser::parse_term(bool idents_are_vars) {
  LinExpr e = parse_factor(idents_are_vars);
  while (true) {
    if (accept("*")) {
      LinExpr f = parse_factor(idents_are_vars);
      if (e.is_constant()) {
        e = f * e.constant_term();
      } else if (f.is_constant()) {
        e *= f.constant_term();
      } else {
        fail("nonlinear product");
      }
    } else if (is_punct("/")) {
      next();
      LinExpr f = parse_factor(idents_are_vars);
      if (!f.is_constant() || f.constant_term() == 0) fail("division by a non-constant or zero");
      e *= Rat(1) / f.constant_term();
    } else {
      break;
    }
  }
  return e;
}

LinExpr ClauseParser::parse_factor(bool idents_are_vars) {
  const Token& t = peek();
  if (t.kind == Token::Number) {
    next();
    return LinExpr::constant(Rat(Int(t.text)));
  }
  if (t.kind == Token::Variable) {
    next();
    return LinExpr::variable(t.text);
  }
  if (t.kind == Token::Ident && idents_are_vars) {
    next();
    return LinExpr::variable(t.text);
  }
  if (accept("(")) {
    LinExpr e = parse_expr(idents_are_vars);
    expect(")");
    return e;
  }
  if (accept("-")) return -parse_factor(idents_are_vars);
  fail("expected expression");
}

RelOp ClauseParser::parse_relop() {
  const Token& t = peek();
  if (t.kind == Token::Punct) {
    RelOp op;
    bool ok = true;
    if (t.text == "=") {
      op = RelOp::Eq;
    } else if (t.text == ">=") {
      op = RelOp::Ge;
    } else if (t.text == ">") {
      op = RelOp::Gt;
    } else if (t.text == "=<" || t.text == "<=") {
      op = RelOp::Le;
    } else if (t.text == "<") {
      op = RelOp::Lt;
    } else {
      ok = false;
    }
    if (ok) {
      next();
      return op;
    }
  }
  fail("expected relation (=, =<, >=, <, >)");
}

LinRel ClauseParser::parse_relation(bool idents_are_vars) {
  LinExpr lhs = parse_expr(idents_are_vars);
  RelOp op = parse_relop();
  LinExpr rhs = parse_expr(idents_are_vars);
  return LinRel::make(lhs, op, rhs);
}

Atom ClauseParser::parse_atom(bool idents_are_vars) {
  const Token& t = peek();
  if (t.kind != Token::Ident) fail("expected predicate name");
  if (t.text == "false" || t.text == "true") fail("reserved word used as predicate");
  Atom a{t.text, {}};
  next();
  if (accept("(")) {
    do {
      a.args.push_back(parse_expr(idents_are_vars));
    } while (accept(","));
    expect(")");
  }
  return a;
}

Constraint ClauseParser::parse_conjunction() {
  Constraint c;
  do {
    const Token& t = peek();
    if (t.kind == Token::Ident && t.text == "true") {
      next();
      continue;
    }
    if (t.kind == Token::Ident && t.text == "false") {
      next();
      c.push_back(LinRel::falsum());
      continue;
    }
    c.push_back(parse_relation());
  } while (accept(","));
  return c;
}

ClauseSet parse_clauses(const std::string& text) {
  ClauseSet out;
  std::map<std::string, std::vector<std::string>> directives;
  ClauseParser p(tokenize(text, &directives));
  while (!p.at_end()) {
    for (auto& c : p.parse_clause()) out.add(c);
  }
  out.directives() = std::move(directives);
  return out;
}

Clause parse_clause(const std::string& text) {
  ClauseParser p(tokenize(text, nullptr));
  auto cs = p.parse_clause();
  if (cs.size() != 1) p.fail("expected a single clause without disjunction");
  if (!p.at_end()) p.fail("trailing input after clause");
  return cs.front();
}

Constraint parse_constraint(const std::string& text) {
  ClauseParser p(tokenize(text, nullptr));
  Constraint c = p.parse_conjunction();
  p.accept(".");
  if (!p.at_end()) p.fail("trailing input after constraint");
  return c;
}

}  // namespace hornlin
