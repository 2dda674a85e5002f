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

#include "hornlin/linear.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hornlin/errors.hpp"

namespace hornlin {

namespace {

// Row `a . x + k rel 0` over indexed variables.
struct Row {
  std::vector<Rat> a;
  Rat k;
  Rel rel = Rel::Ge;

  bool is_ground() const {
    return std::all_of(a.begin(), a.end(), [](const Rat& q) { return q == 0; });
  }
  bool ground_value() const {
    switch (rel) {
      case Rel::Eq: return k == 0;
      case Rel::Ge: return k >= 0;
      case Rel::Gt: return k > 0;
    }
    return false;
  }
};

struct Indexed {
  std::vector<Var> names;
  std::map<Var, size_t> index;
  std::vector<Row> rows;
};

Indexed index_constraint(const Constraint& c) {
  Indexed p;
  for (const auto& r : c) {
    for (const auto& [v, q] : r.expr.coeffs()) {
      (void)q;
      if (p.index.emplace(v, p.names.size()).second) p.names.push_back(v);
    }
  }
  for (const auto& r : c) {
    Row row;
    row.a.assign(p.names.size(), Rat(0));
    for (const auto& [v, q] : r.expr.coeffs()) row.a[p.index.at(v)] = q;
    row.k = r.expr.constant_term();
    row.rel = r.rel;
    p.rows.push_back(std::move(row));
  }
  return p;
}

void scale(Row& r, const Rat& f) {
  for (auto& q : r.a) q *= f;
  r.k *= f;
}

// Scales the coefficients to primitive integers (positive factor). In
// integral mode the row is tightened: strict rows become non-strict, the
// constant is rounded, and an equality whose constant is not divisible by
// the coefficient gcd is reported as infeasible.
bool normalize_row(Row& r, bool integral) {
  Int l = 1;
  for (const auto& q : r.a) {
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  Int g = 0;
  for (const auto& q : r.a) {
    if (q == 0) continue;
    Int num = Int(q.get_num()) * l / Int(q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return r.ground_value();
  scale(r, Rat(l) / Rat(g));
  if (r.rel == Rel::Eq) {
    for (const auto& q : r.a) {
      if (q == 0) continue;
      if (q < 0) scale(r, Rat(-1));
      break;
    }
  }
  if (!integral) return true;
  if (r.rel == Rel::Eq) return is_integer(r.k);
  if (r.rel == Rel::Gt) {
    r.k = is_integer(r.k) ? Rat(r.k - 1) : Rat(floor_of(r.k));
    r.rel = Rel::Ge;
  } else {
    r.k = Rat(floor_of(r.k));
  }
  return true;
}

// Removes ground-true rows, duplicates and dominated inequalities.
// Returns false when some row is infeasible on its own.
bool compact(std::vector<Row>& rows, bool integral) {
  std::vector<Row> out;
  std::map<std::pair<std::vector<Rat>, bool>, size_t> seen;
  for (auto& r : rows) {
    if (!normalize_row(r, integral)) return false;
    if (r.is_ground()) continue;
    bool eq = r.rel == Rel::Eq;
    auto key = std::make_pair(r.a, eq);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(r));
      continue;
    }
    Row& old = out[it->second];
    if (eq) {
      if (old.k != r.k) return false;
      continue;
    }
    bool tighter = r.k < old.k || (r.k == old.k && r.rel == Rel::Gt);
    if (tighter) old = std::move(r);
  }
  rows = std::move(out);
  return true;
}

struct Elim {
  size_t var = 0;
  bool is_eq = false;
  Row eq;
  std::vector<Row> lower;
  std::vector<Row> upper;
};

// Eliminates variable j from `target` using equality `e` (e.a[j] != 0).
void substitute_eq(Row& target, const Row& e, size_t j) {
  if (target.a[j] == 0) return;
  Rat f = target.a[j] / e.a[j];
  for (size_t i = 0; i < target.a.size(); ++i) target.a[i] -= f * e.a[i];
  target.k -= f * e.k;
  target.a[j] = 0;
}

Row combine(const Row& p, const Row& n, size_t j) {
  Row r;
  Rat fp = -n.a[j];
  Rat fn = p.a[j];
  r.a.resize(p.a.size());
  for (size_t i = 0; i < p.a.size(); ++i) r.a[i] = fp * p.a[i] + fn * n.a[i];
  r.a[j] = 0;
  r.k = fp * p.k + fn * n.k;
  r.rel = (p.rel == Rel::Gt || n.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
  return r;
}

// Picks the equality pivot: in integral mode a unit coefficient if one
// exists, otherwise the smallest magnitude; restricted to `allowed`.
std::optional<size_t> eq_pivot(const Row& r, const std::vector<bool>& allowed) {
  std::optional<size_t> best;
  for (size_t i = 0; i < r.a.size(); ++i) {
    if (r.a[i] == 0 || !allowed[i]) continue;
    if (!best || abs(r.a[i]) < abs(r.a[*best])) best = i;
  }
  return best;
}

// Runs equality substitution then Fourier-Motzkin on the variables marked
// in `allowed`. Returns false on infeasibility; `rows` keeps what is left.
bool eliminate_rows(std::vector<Row>& rows, const std::vector<bool>& allowed,
                    bool integral, size_t budget, std::vector<Elim>* trail) {
  if (!compact(rows, integral)) return false;
  for (;;) {
    size_t idx = rows.size();
    std::optional<size_t> piv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rel != Rel::Eq) continue;
      piv = eq_pivot(rows[i], allowed);
      if (piv) {
        idx = i;
        break;
      }
    }
    if (!piv) break;
    Row e = rows[idx];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(idx));
    for (auto& r : rows) substitute_eq(r, e, *piv);
    if (trail) trail->push_back(Elim{*piv, true, e, {}, {}});
    if (!compact(rows, integral)) return false;
  }
  for (;;) {
    std::optional<size_t> best;
    long best_cost = 0;
    size_t n = rows.empty() ? 0 : rows[0].a.size();
    for (size_t j = 0; j < n; ++j) {
      if (!allowed[j]) continue;
      long pos = 0, neg = 0;
      bool in_eq = false;
      for (const auto& r : rows) {
        if (r.a[j] > 0) ++pos;
        if (r.a[j] < 0) ++neg;
        if (r.a[j] != 0 && r.rel == Rel::Eq) in_eq = true;
      }
      if (pos + neg == 0 || in_eq) continue;
      long cost = pos * neg - pos - neg;
      if (!best || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (!best) break;
    size_t j = *best;
    Elim el;
    el.var = j;
    std::vector<Row> next;
    for (auto& r : rows) {
      if (r.a[j] > 0) {
        el.lower.push_back(r);
      } else if (r.a[j] < 0) {
        el.upper.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    for (const auto& p : el.lower) {
      for (const auto& q : el.upper) {
        next.push_back(combine(p, q, j));
        if (next.size() > budget) {
          throw ResourceLimit("Fourier-Motzkin row budget exceeded");
        }
      }
    }
    rows = std::move(next);
    if (trail) trail->push_back(std::move(el));
    if (!compact(rows, integral)) return false;
  }
  return true;
}

Rat rest_value(const Row& r, size_t j, const std::vector<Rat>& x) {
  Rat s = r.k;
  for (size_t i = 0; i < r.a.size(); ++i) {
    if (i != j && r.a[i] != 0) s += r.a[i] * x[i];
  }
  return s;
}

// Chooses a value in the interval, preferring 0, then integers.
Rat pick_value(const std::optional<Rat>& lo, bool lo_strict, const std::optional<Rat>& hi,
               bool hi_strict) {
  auto ok = [&](const Rat& v) {
    if (lo && (lo_strict ? !(v > *lo) : !(v >= *lo))) return false;
    if (hi && (hi_strict ? !(v < *hi) : !(v <= *hi))) return false;
    return true;
  };
  if (ok(Rat(0))) return Rat(0);
  if (lo) {
    Rat c(ceil_of(*lo));
    if (lo_strict && c == *lo) c += 1;
    if (ok(c)) return c;
  }
  if (hi) {
    Rat f(floor_of(*hi));
    if (hi_strict && f == *hi) f -= 1;
    if (ok(f)) return f;
  }
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo + 1;
  return *hi - 1;
}

std::vector<Rat> back_substitute(size_t n, const std::vector<Elim>& trail) {
  std::vector<Rat> x(n, Rat(0));
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    size_t j = it->var;
    if (it->is_eq) {
      x[j] = -rest_value(it->eq, j, x) / it->eq.a[j];
      continue;
    }
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : it->lower) {
      Rat b = -rest_value(r, j, x) / r.a[j];
      bool s = r.rel == Rel::Gt;
      if (!lo || b > *lo || (b == *lo && s)) {
        lo = b;
        lo_strict = s;
      }
    }
    for (const auto& r : it->upper) {
      Rat b = rest_value(r, j, x) / (-r.a[j]);
      bool s = r.rel == Rel::Gt;
      if (!hi || b < *hi || (b == *hi && s)) {
        hi = b;
        hi_strict = s;
      }
    }
    x[j] = pick_value(lo, lo_strict, hi, hi_strict);
  }
  return x;
}

std::optional<std::vector<Rat>> fm_solve(size_t n, std::vector<Row> rows, bool integral,
                                         size_t budget) {
  std::vector<bool> all(n, true);
  std::vector<Elim> trail;
  if (!eliminate_rows(rows, all, integral, budget, &trail)) return std::nullopt;
  return back_substitute(n, trail);
}

LinRel to_relation(const Row& r, const std::vector<Var>& names) {
  LinExpr e = LinExpr::constant(r.k);
  for (size_t i = 0; i < r.a.size(); ++i) {
    if (r.a[i] != 0) e.add_term(names[i], r.a[i]);
  }
  return LinRel{e, r.rel}.normalized();
}

}  // namespace

Constraint simplify_ground(const Constraint& c) {
  Constraint out;
  for (const auto& r : c) {
    if (r.is_ground()) {
      if (!r.ground_value()) return {LinRel::falsum()};
      continue;
    }
    out.push_back(r);
  }
  return out;
}

Constraint conjoin(const Constraint& a, const Constraint& b) {
  Constraint all = a;
  all.insert(all.end(), b.begin(), b.end());
  return simplify_ground(all);
}

std::optional<RatEnv> solve_q(const Constraint& c, size_t row_budget) {
  Indexed p = index_constraint(c);
  auto x = fm_solve(p.names.size(), p.rows, false, row_budget);
  if (!x) return std::nullopt;
  RatEnv env;
  for (size_t i = 0; i < p.names.size(); ++i) env[p.names[i]] = (*x)[i];
  return env;
}

QResult sat_q(const Constraint& c, size_t row_budget) {
  return solve_q(c, row_budget) ? QResult::Sat : QResult::Unsat;
}

ZResult sat_z(const Constraint& c, size_t budget, size_t row_budget) {
  Indexed p = index_constraint(c);
  size_t n = p.names.size();
  std::vector<std::vector<Row>> stack{{}};
  size_t nodes = 0;
  bool incomplete = false;
  while (!stack.empty()) {
    std::vector<Row> extra = std::move(stack.back());
    stack.pop_back();
    if (++nodes > budget) return ZResult{ZResult::Unknown, {}};
    std::vector<Row> rows = p.rows;
    rows.insert(rows.end(), extra.begin(), extra.end());
    std::optional<std::vector<Rat>> x;
    try {
      x = fm_solve(n, std::move(rows), true, row_budget);
    } catch (const ResourceLimit&) {
      incomplete = true;
      continue;
    }
    if (!x) continue;
    std::optional<size_t> frac;
    for (size_t i = 0; i < n; ++i) {
      if (!is_integer((*x)[i])) {
        frac = i;
        break;
      }
    }
    if (!frac) {
      ZResult res{ZResult::Sat, {}};
      for (size_t i = 0; i < n; ++i) res.witness[p.names[i]] = (*x)[i].get_num();
      return res;
    }
    Row up, down;
    up.a.assign(n, Rat(0));
    down.a.assign(n, Rat(0));
    up.a[*frac] = 1;
    up.k = -Rat(ceil_of((*x)[*frac]));
    down.a[*frac] = -1;
    down.k = Rat(floor_of((*x)[*frac]));
    auto hi_branch = extra;
    hi_branch.push_back(up);
    extra.push_back(down);
    stack.push_back(std::move(hi_branch));
    stack.push_back(std::move(extra));
  }
  return ZResult{incomplete ? ZResult::Unknown : ZResult::Unsat, {}};
}

Constraint eliminate(const Constraint& c, const VarSet& vs, size_t row_budget) {
  Indexed p = index_constraint(c);
  std::vector<bool> allowed(p.names.size(), false);
  for (size_t i = 0; i < p.names.size(); ++i) allowed[i] = vs.count(p.names[i]) != 0;
  std::vector<Row> rows = p.rows;
  if (!eliminate_rows(rows, allowed, false, row_budget, nullptr)) return {LinRel::falsum()};
  Constraint out;
  for (const auto& r : rows) out.push_back(to_relation(r, p.names));
  return out;
}

std::vector<LinRel> negate_over_z(const LinRel& r) {
  switch (r.rel) {
    case Rel::Ge: return {LinRel{-r.expr, Rel::Gt}};
    case Rel::Gt: return {LinRel{-r.expr, Rel::Ge}};
    case Rel::Eq: return {LinRel{r.expr, Rel::Gt}, LinRel{-r.expr, Rel::Gt}};
  }
  return {};
}

EntailResult entails(const Constraint& c1, const Constraint& c2, size_t budget) {
  bool unknown = false;
  for (const auto& r : c2) {
    for (const auto& neg : negate_over_z(r)) {
      Constraint q = c1;
      q.push_back(neg);
      ZResult z = sat_z(q, budget);
      if (z.kind == ZResult::Sat) {
        EntailResult res{EntailResult::Invalid, z.witness};
        std::vector<Var> vs;
        for (const auto& x : c2) x.expr.collect_vars(vs);
        for (const auto& v : vs) res.witness.emplace(v, Int(0));
        return res;
      }
      if (z.kind == ZResult::Unknown) unknown = true;
    }
  }
  return EntailResult{unknown ? EntailResult::Unknown : EntailResult::Valid, {}};
}

std::vector<std::vector<Var>> equal_variable_classes(const Constraint& c,
                                                     const std::vector<Var>& order) {
  Constraint eqs;
  for (const auto& r : c) {
    if (r.rel == Rel::Eq) eqs.push_back(r);
  }
  Indexed p = index_constraint(eqs);
  size_t n = p.names.size();
  std::vector<Row> m = p.rows;
  std::vector<std::optional<size_t>> pivot_row(n);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m.size(); ++col) {
    size_t sel = rank;
    while (sel < m.size() && m[sel].a[col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    scale(m[rank], Rat(1) / m[rank].a[col]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i != rank) substitute_eq(m[i], m[rank], col);
    }
    pivot_row[col] = rank;
    ++rank;
  }
  // Value of each variable as an affine function of the free columns.
  std::map<std::pair<std::vector<Rat>, Rat>, std::vector<Var>> groups;
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rat> lin(n, Rat(0));
    Rat k = 0;
    if (pivot_row[j]) {
      const Row& r = m[*pivot_row[j]];
      for (size_t i = 0; i < n; ++i) {
        if (i != j) lin[i] = -r.a[i];
      }
      k = -r.k;
    } else {
      lin[j] = 1;
    }
    groups[{lin, k}].push_back(p.names[j]);
  }
  std::map<Var, size_t> pos;
  for (const auto& v : order) pos.emplace(v, pos.size());
  auto rank_of = [&](const Var& v) {
    auto it = pos.find(v);
    return it == pos.end() ? order.size() : it->second;
  };
  auto before = [&](const Var& a, const Var& b) {
    size_t ra = rank_of(a), rb = rank_of(b);
    return ra != rb ? ra < rb : a < b;
  };
  std::vector<std::vector<Var>> out;
  for (auto& [key, members] : groups) {
    (void)key;
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), before);
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return before(x.front(), y.front()); });
  return out;
}

Constraint remove_redundant(const Constraint& c, size_t row_budget) {
  Constraint kept;
  std::vector<LinRel> keys;
  for (const auto& r : c) {
    LinRel n = r.normalized();
    if (std::find(keys.begin(), keys.end(), n) != keys.end()) continue;
    keys.push_back(n);
    kept.push_back(r);
  }
  for (size_t i = 0; i < kept.size();) {
    if (kept[i].rel == Rel::Eq) {
      ++i;
      continue;
    }
    Constraint rest;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.push_back(kept[j]);
    }
    LinRel neg = kept[i].rel == Rel::Ge ? LinRel{-kept[i].expr, Rel::Gt}
                                        : LinRel{-kept[i].expr, Rel::Ge};
    rest.push_back(neg);
    if (sat_q(rest, row_budget) == QResult::Unsat) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace hornlin
