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

// Acceptance checks. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hornlin/chc.hpp"
#include "hornlin/external.hpp"
#include "hornlin/oracle.hpp"
#include "hornlin/smtlib.hpp"
#include "hornlin/solution.hpp"
#include "hornlin/transform.hpp"
#include "test_util.hpp"

namespace {

using namespace hornlin;
using testing::corpus;
using testing::load_golden;
using testing::load_program;
using testing::load_spec;
using testing::read_file;

// Wall-clock limits in seconds.
constexpr double kCorpusLimit = 30;
constexpr double kEquisatLimit = 300;
constexpr double kTransportLimit = 10;
constexpr double kVerifyLimit = 1;
constexpr double kSolverTimeout = 120;
// The pre-linearization script is only recorded, with a shorter timeout.
constexpr double kPreLinTimeout = 30;
constexpr size_t kOracleDepth = 8;
constexpr size_t kFunctionalityDepth = 12;
// Spacer option appended to the z3 command line.
constexpr const char* kZ3Options = " fp.spacer.global=true";

const std::vector<std::string> kCorpus = {"fibonacci", "gcd", "integer_division", "remainder",
                                          "sum_first_integers", "integer_multiplication", "hanoi",
                                          "lucas", "padovan", "perrin"};

enum class Outcome { Pass, Fail, Skip };

struct Verdict {
  Outcome outcome = Outcome::Fail;
  std::string detail;
};

Verdict pass(std::string d) { return {Outcome::Pass, std::move(d)}; }
Verdict fail(std::string d) { return {Outcome::Fail, std::move(d)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

ClauseSet fib_ri() {
  return remove_interpreter(encode_opsem(load_program("fibonacci"), load_spec("fibonacci")));
}

Verdict goals_of_fibonacci() {
  ClauseSet goals = build_pcorr(load_spec("fibonacci"));
  if (goals.size() != 6) return fail(std::to_string(goals.size()) + " goals");
  if (!canonically_equal(goals, load_golden("fibonacci_goals.chc"))) return fail("goal set differs");
  return pass("six goals canonically equal to the reference");
}

Verdict interpreter_removal() {
  ClauseSet ri = fib_ri();
  if (!canonically_equal(ri, load_golden("fibonacci_ri.chc"))) return fail(to_string(ri));
  return pass("three clauses canonically equal to the reference");
}

Verdict linearization_of_fibonacci() {
  ClauseSet goals = build_pcorr(load_spec("fibonacci"));
  ClauseSet g;
  g.add(goals[4]);
  LinStats st;
  ClauseSet lin = linearize(fib_ri(), g, nullptr, &st);
  if (!canonically_equal(lin, load_golden("fibonacci_lin.chc"))) return fail("clause set differs");
  const auto& sig = lin.signature();
  if (st.definitions != 3 || sig.at("new1") != 8 || sig.at("new2") != 4 || sig.at("new3") != 6) {
    return fail("unexpected definitions");
  }
  return pass("goal plus 14 clauses, definitions new1/8 new2/4 new3/6");
}

Verdict corpus_linearity() {
  auto t0 = std::chrono::steady_clock::now();
  size_t clauses = 0;
  for (const auto& name : kCorpus) {
    ClauseSet ri = apply_ri(testing::load_pc(name));
    LinStats st;
    ClauseSet lin = apply_lin(ri, nullptr, &st);
    clauses += lin.size();
    if (lin.max_body_width() > 1) return fail(name + ": body width " + std::to_string(lin.max_body_width()));
    if (st.max_definition_atoms > st.max_goal_atoms) {
      return fail(name + ": definition with " + std::to_string(st.max_definition_atoms) + " atoms");
    }
  }
  double dt = seconds_since(t0);
  std::string d = std::to_string(kCorpus.size()) + " programs, " + std::to_string(clauses) +
                  " output clauses, " + fmt_seconds(dt);
  return dt < kCorpusLimit ? pass(d) : fail(d + " exceeds limit");
}

OracleResult::Kind verdict(const ClauseSet& s, std::string* problem) {
  OracleResult r = bounded_counterexample(s, kOracleDepth);
  if (r.kind == OracleResult::Cex && !replay_cex(s, r)) *problem = "witness does not replay";
  return r.kind;
}

Verdict bounded_equisatisfiability() {
  auto t0 = std::chrono::steady_clock::now();
  size_t items = 0;
  for (const auto& name : kCorpus) {
    ImpProgram p = load_program(name);
    std::vector<std::string> specs = {corpus("specs/" + name + ".spec")};
    for (int k = 1; k <= 3; ++k) specs.push_back(corpus("mutants/" + name + "_m" + std::to_string(k) + ".spec"));
    for (size_t i = 0; i < specs.size(); ++i) {
      SpecTriple t = parse_spec(read_file(specs[i]));
      ClauseSet pc = assemble_pc(encode_opsem(p, t), t);
      ClauseSet ri = apply_ri(pc);
      ClauseSet lin = apply_lin(ri);
      std::string problem;
      OracleResult::Kind a = verdict(pc, &problem);
      OracleResult::Kind b = verdict(ri, &problem);
      OracleResult::Kind c = verdict(lin, &problem);
      std::string what = specs[i].substr(specs[i].rfind('/') + 1);
      if (!problem.empty()) return fail(what + ": " + problem);
      if (a != b || b != c) return fail(what + ": verdicts differ across the stages");
      if (a != OracleResult::NoCex && a != OracleResult::Cex) return fail(what + ": inconclusive");
      bool mutant = i > 0;
      if (mutant != (a == OracleResult::Cex)) return fail(what + ": unexpected verdict");
      if (mutant) {
        OracleResult r = bounded_counterexample(pc, kOracleDepth);
        std::string detail;
        if (!cex_violates_spec(r, t, p, &detail)) return fail(what + ": " + detail);
      }
      ++items;
    }
  }
  double dt = seconds_since(t0);
  std::string d = std::to_string(items) + " specs agree at depth 8, every mutant refuted by the interpreter, " +
                  fmt_seconds(dt);
  return dt < kEquisatLimit ? pass(d) : fail(d + " exceeds limit");
}

Verdict solution_transport() {
  auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"doubling", "counters", "triangular"}) {
    std::string base = corpus(std::string("chc/") + name);
    ClauseSet s = parse_clauses(read_file(base + ".chc"));
    SymbolicInterp sigma = parse_solution(read_file(base + ".sigma"));
    if (!verify_solution(s, sigma).all_valid()) return fail(std::string(name) + ": input solution rejected");
    LinStats st;
    ClauseSet lin = apply_lin(s, nullptr, &st);
    SymbolicInterp moved = transport_solution(sigma, st.definition_clauses);
    if (!verify_solution(lin, moved).all_valid()) return fail(std::string(name) + ": transported solution rejected");
  }
  double dt = seconds_since(t0);
  std::string d = "doubling, counters, triangular all valid after linearization, " + fmt_seconds(dt);
  return dt < kTransportLimit ? pass(d) : fail(d + " exceeds limit");
}

Verdict solution_verification() {
  auto t0 = std::chrono::steady_clock::now();
  ClauseSet s = parse_clauses(read_file(corpus("chc/doubling.chc")));
  if (!verify_solution(s, parse_solution(read_file(corpus("chc/doubling.sigma")))).all_valid()) {
    return fail("doubling solution rejected");
  }
  SymbolicInterp weak = parse_solution(read_file(corpus("chc/doubling_weak.sigma")));
  SolutionReport rep = verify_solution(s, weak);
  std::string witness;
  for (size_t i = 0; i < s.size(); ++i) {
    const ClauseVerdict& v = rep.verdicts[i];
    if (v.kind == ClauseVerdict::Unknown) return fail("unknown verdict");
    if (v.kind != ClauseVerdict::Invalid) continue;
    if (!witness_refutes(s[i], weak, v.witness)) return fail("witness does not refute the clause");
    for (const auto& [x, val] : v.witness) witness += " " + x + "=" + val.get_str();
  }
  if (witness.empty()) return fail("weakened solution accepted");
  double dt = seconds_since(t0);
  std::string d = "weakened solution refuted by" + witness + ", " + fmt_seconds(dt);
  return dt < kVerifyLimit ? pass(d) : fail(d + " exceeds limit");
}

Verdict external_solver() {
  std::string cmd;
  if (auto c = configured_solver("")) {
    cmd = *c;
  } else if (auto z3 = find_on_path("z3")) {
    cmd = *z3 + kZ3Options;
  } else {
    return {Outcome::Skip, "no Horn solver configured"};
  }
  ClauseSet ri = apply_ri(testing::load_pc("fibonacci"));
  ExternalResult post = run_external(emit_smtlib(apply_lin(ri)), cmd, kSolverTimeout);
  ExternalResult pre = run_external(emit_smtlib(ri), cmd, kPreLinTimeout);
  std::string d = "solver '" + cmd + "': linearized " + to_string(post.kind) + " in " +
                  fmt_seconds(post.seconds) + "; before linearization " + to_string(pre.kind) +
                  " after " + fmt_seconds(pre.seconds) + " (recorded only)";
  return post.kind == ExternalResult::Sat ? pass(d) : fail(d);
}

Verdict fibonacci_functionality() {
  std::vector<std::vector<Int>> samples;
  for (int n = 0; n <= 6; ++n) samples.push_back({Int(n)});
  FunctionalityReport rep = check_functionality(load_spec("fibonacci"), samples, kFunctionalityDepth);
  const int expected[] = {1, 1, 2, 3, 5, 8, 13};
  std::string values;
  for (size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    if (e.status != FunctionalityEntry::Unique || e.values.size() != 1 || e.values[0] != expected[i]) {
      return fail("N=" + std::to_string(i) + " not uniquely " + std::to_string(expected[i]));
    }
    values += (values.empty() ? "" : ",") + e.values[0].get_str();
  }
  if (rep.entries.size() != 7 || rep.uniqueness_violation) return fail("bad report");
  return pass("fib(0..6) = " + values);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"Fibonacci goals", goals_of_fibonacci},
      {"interpreter removal", interpreter_removal},
      {"Fibonacci linearization", linearization_of_fibonacci},
      {"corpus linearity and bounds", corpus_linearity},
      {"bounded equisatisfiability", bounded_equisatisfiability},
      {"solution transport", solution_transport},
      {"solution verification", solution_verification},
      {"external Horn solver", external_solver},
      {"Fibonacci functionality", fibonacci_functionality},
  };
  bool ok = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Skip ? "SKIP" : "FAIL";
    if (v.outcome == Outcome::Fail) ok = false;
    std::cout << "criterion " << i + 1 << " " << tag << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  return ok ? 0 : 1;
}
