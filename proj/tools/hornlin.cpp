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

// Command-line driver: encode, ri, lin, pipeline, check, verify and emit.
//
// Exit codes: 0 success (no counterexample, sat, all valid), 1
// counterexample, invalid clause or external unsat, 2 usage or input
// error, 3 unknown, timeout, budget exhaustion or solver failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hornlin/encoder.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/external.hpp"
#include "hornlin/imp.hpp"
#include "hornlin/oracle.hpp"
#include "hornlin/smtlib.hpp"
#include "hornlin/solution.hpp"
#include "hornlin/spec.hpp"
#include "hornlin/syntax.hpp"
#include "hornlin/transform.hpp"
#include "json.hpp"

namespace {

using hornlin::ClauseSet;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  std::string trace;
  std::string emit = "clauses";
  std::string solver;
  double timeout = 120;
  size_t depth = hornlin::kDefaultOracleDepth;
  size_t budget = hornlin::kDefaultOracleBudget;
  size_t jobs = 1;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hornlin::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hornlin::Error("cannot write " + path);
  out << text;
}

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

ClauseSet read_clauses(const std::string& path) {
  std::string text = read_file(path);
  return has_suffix(path, ".smt2") ? hornlin::parse_smtlib(text) : hornlin::parse_clauses(text);
}

// Stage summary: counts the quantities the linearization bound is about.
json summarize(const std::string& stage, const ClauseSet& s,
               const hornlin::LinStats* lin = nullptr) {
  json j;
  j["stage"] = stage;
  j["clauses"] = s.size();
  j["goals"] = std::count_if(s.begin(), s.end(), [](const hornlin::Clause& c) { return c.is_goal(); });
  j["max_body_width"] = s.max_body_width();
  if (lin) {
    j["definitions"] = lin->definitions;
    j["max_goal_atoms"] = lin->max_goal_atoms;
    j["max_definition_atoms"] = lin->max_definition_atoms;
  }
  return j;
}

std::string summary_line(const json& j) {
  std::ostringstream os;
  os << j["stage"].get<std::string>() << ": " << j["clauses"] << " clauses, " << j["goals"]
     << " goals, max body width " << j["max_body_width"];
  if (j.contains("definitions")) {
    os << ", " << j["definitions"] << " definitions (max " << j["max_definition_atoms"]
       << " atoms, max goal " << j["max_goal_atoms"] << " atoms)";
  }
  return os.str();
}

// Writes the artifact to --out or stdout and the summaries to stdout when
// the artifact went to a file, to stderr otherwise.
void deliver(const Options& o, const std::string& artifact, const json& stages) {
  if (o.out.empty()) {
    std::cout << artifact;
  } else {
    write_file(o.out, artifact);
  }
  std::ostream& os = o.out.empty() ? std::cerr : std::cout;
  if (o.json) {
    os << json{{"stages", stages}}.dump(2) << "\n";
  } else {
    for (const auto& j : stages) os << summary_line(j) << "\n";
  }
}

std::string render(const Options& o, const ClauseSet& s) {
  return o.emit == "smtlib" ? hornlin::emit_smtlib(s) : hornlin::to_string(s);
}

ClauseSet encode_inputs(const std::string& prog_path, const std::string& spec_path) {
  hornlin::ImpProgram p = hornlin::normalize_jumps(hornlin::parse_imp(read_file(prog_path)));
  hornlin::SpecTriple t = hornlin::parse_spec(read_file(spec_path));
  hornlin::validate_spec(t, p);
  return hornlin::assemble_pc(hornlin::encode_opsem(p, t), t);
}

int run_solver(const Options& o, const std::string& script, json& report) {
  auto cmd = hornlin::configured_solver(o.solver);
  if (!cmd) return kOk;
  hornlin::ExternalResult r = hornlin::run_external(script, *cmd, o.timeout);
  report["stage"] = "solve";
  report["solver"] = *cmd;
  report["verdict"] = hornlin::to_string(r.kind);
  report["seconds"] = r.seconds;
  std::cerr << "solver: " << hornlin::to_string(r.kind) << " (" << r.seconds << " s)\n";
  if (r.kind == hornlin::ExternalResult::SolverError) std::cerr << r.output;
  switch (r.kind) {
    case hornlin::ExternalResult::Sat:
      return kOk;
    case hornlin::ExternalResult::Unsat:
      return kRefuted;
    default:
      return kUnknown;
  }
}

int cmd_encode(const Options& o) {
  if (o.inputs.size() != 2) throw CLI::ValidationError("encode takes a program and a spec");
  ClauseSet pc = encode_inputs(o.inputs[0], o.inputs[1]);
  deliver(o, render(o, pc), json::array({summarize("encode", pc)}));
  return kOk;
}

int cmd_transform(const Options& o, bool ri) {
  if (o.inputs.size() != 1) throw CLI::ValidationError("expected one clause file");
  ClauseSet in = read_clauses(o.inputs[0]);
  hornlin::TransformTrace trace;
  hornlin::TransformTrace* tp = o.trace.empty() ? nullptr : &trace;
  hornlin::LinStats st;
  ClauseSet out = ri ? hornlin::apply_ri(in, tp) : hornlin::apply_lin(in, tp, &st);
  if (tp) write_file(o.trace, trace.to_text());
  deliver(o, render(o, out), json::array({summarize(ri ? "ri" : "lin", out, ri ? nullptr : &st)}));
  return kOk;
}

int cmd_pipeline(const Options& o) {
  if (o.inputs.size() != 2) throw CLI::ValidationError("pipeline takes a program and a spec");
  ClauseSet pc = encode_inputs(o.inputs[0], o.inputs[1]);
  hornlin::TransformTrace trace;
  hornlin::TransformTrace* tp = o.trace.empty() ? nullptr : &trace;
  ClauseSet ri = hornlin::apply_ri(pc, tp);
  hornlin::LinStats st;
  ClauseSet lin = hornlin::apply_lin(ri, tp, &st);
  if (tp) write_file(o.trace, trace.to_text());
  std::string script = hornlin::emit_smtlib(lin);
  json stages = json::array({summarize("encode", pc), summarize("ri", ri), summarize("lin", lin, &st)});
  json solver;
  int code = run_solver(o, script, solver);
  if (!solver.empty()) stages.push_back(solver);
  if (o.out.empty()) {
    std::cout << script;
  } else {
    write_file(o.out, script);
  }
  std::ostream& os = o.out.empty() ? std::cerr : std::cout;
  if (o.json) {
    os << json{{"stages", stages}}.dump(2) << "\n";
  } else {
    for (const auto& j : stages) {
      if (j["stage"] != "solve") os << summary_line(j) << "\n";
    }
  }
  return code;
}

int cmd_emit(const Options& o) {
  if (o.inputs.size() != 1) throw CLI::ValidationError("expected one clause file");
  ClauseSet in = read_clauses(o.inputs[0]);
  std::string script = hornlin::emit_smtlib(in);
  json stages = json::array({summarize("emit", in)});
  json solver;
  int code = run_solver(o, script, solver);
  if (!solver.empty()) stages.push_back(solver);
  if (o.out.empty()) {
    std::cout << script;
  } else {
    write_file(o.out, script);
  }
  if (o.json) (o.out.empty() ? std::cerr : std::cout) << json{{"stages", stages}}.dump(2) << "\n";
  return code;
}

struct CheckOutcome {
  int code = kOk;
  std::string text;
  json report;
};

CheckOutcome check_one(const Options& o, const std::string& path) {
  CheckOutcome res;
  try {
    ClauseSet s = read_clauses(path);
    hornlin::OracleResult r = hornlin::bounded_counterexample(s, o.depth, o.budget);
    res.text = hornlin::to_string(r);
    res.report = {{"file", path}, {"depth", o.depth}, {"nodes", r.nodes}};
    switch (r.kind) {
      case hornlin::OracleResult::NoCex:
        res.report["verdict"] = "no-counterexample";
        break;
      case hornlin::OracleResult::Cex: {
        res.code = kRefuted;
        res.report["verdict"] = "counterexample";
        res.report["goal"] = hornlin::to_string(r.goal);
        json w = json::object();
        for (const auto& [v, val] : r.leaf.witness) {
          if (v.find('\'') == std::string::npos) w[v] = val.get_str();
        }
        res.report["witness"] = w;
        break;
      }
      case hornlin::OracleResult::Unknown:
        res.code = kUnknown;
        res.report["verdict"] = "unknown";
        break;
      case hornlin::OracleResult::BudgetExhausted:
        res.code = kUnknown;
        res.report["verdict"] = "budget-exhausted";
        break;
    }
  } catch (const hornlin::Error& e) {
    res.code = kUsage;
    res.text = path + ": " + e.what();
    res.report = {{"file", path}, {"error", e.what()}};
  }
  return res;
}

int cmd_check(const Options& o) {
  if (o.inputs.empty()) throw CLI::ValidationError("check needs at least one clause file");
  std::vector<CheckOutcome> results(o.inputs.size());
  size_t jobs = std::max<size_t>(1, o.jobs);
  for (size_t start = 0; start < o.inputs.size(); start += jobs) {
    std::vector<std::future<CheckOutcome>> batch;
    for (size_t i = start; i < std::min(o.inputs.size(), start + jobs); ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, check_one,
                                 std::cref(o), std::cref(o.inputs[i])));
    }
    for (size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }
  int code = kOk;
  json all = json::array();
  for (const auto& r : results) {
    code = std::max(code, r.code);
    all.push_back(r.report);
    if (!o.json) {
      if (r.code == kUsage) {
        std::cerr << r.text << "\n";
      } else {
        if (o.inputs.size() > 1) std::cout << r.report["file"].get<std::string>() << ": ";
        std::cout << r.text << "\n";
      }
    }
  }
  if (o.json) std::cout << json{{"results", all}}.dump(2) << "\n";
  return code;
}

int cmd_verify(const Options& o) {
  if (o.inputs.size() != 2) throw CLI::ValidationError("verify takes a clause file and a solution file");
  ClauseSet s = read_clauses(o.inputs[0]);
  hornlin::SymbolicInterp sigma = hornlin::parse_solution(read_file(o.inputs[1]));
  hornlin::SolutionReport rep = hornlin::verify_solution(s, sigma);
  int code = rep.all_valid() ? kOk : rep.any_invalid() ? kRefuted : kUnknown;
  if (o.json) {
    json cl = json::array();
    for (size_t i = 0; i < s.size(); ++i) {
      const auto& v = rep.verdicts[i];
      json j{{"clause", hornlin::to_string(s[i])},
             {"verdict", v.kind == hornlin::ClauseVerdict::Valid     ? "valid"
                         : v.kind == hornlin::ClauseVerdict::Invalid ? "invalid"
                                                                     : "unknown"}};
      if (v.kind == hornlin::ClauseVerdict::Invalid) {
        json w = json::object();
        for (const auto& [x, val] : v.witness) w[x] = val.get_str();
        j["witness"] = w;
      }
      cl.push_back(j);
    }
    std::cout << json{{"all_valid", rep.all_valid()}, {"clauses", cl}}.dump(2) << "\n";
  } else {
    std::cout << hornlin::to_string(rep, s)
              << (rep.all_valid() ? "all clauses valid\n" : "not an LA-solution\n");
  }
  return code;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Horn clause encoder, transformer and checker for small imperative programs"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("inputs", o.inputs, "Input files")->required();
    sub->add_option("--out,-o", o.out, "Write the result to this file");
    sub->add_flag("--json", o.json, "Machine-readable summary");
  };
  auto add_trace = [&o](CLI::App* sub) {
    sub->add_option("--trace", o.trace, "Write the rule applications to this file");
  };
  auto add_emit = [&o](CLI::App* sub) {
    sub->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"clauses", "smtlib"}));
  };
  auto add_solver = [&o](CLI::App* sub) {
    sub->add_option("--solver", o.solver, "External Horn solver command (default: $HL_SOLVER)");
    sub->add_option("--timeout", o.timeout, "Solver timeout in seconds");
  };
  auto* encode = app.add_subcommand("encode", "Encode a program and its spec as clauses");
  add_common(encode);
  add_emit(encode);
  auto* ri = app.add_subcommand("ri", "Remove the interpreter");
  add_common(ri);
  add_trace(ri);
  add_emit(ri);
  auto* lin = app.add_subcommand("lin", "Linearize the goals");
  add_common(lin);
  add_trace(lin);
  add_emit(lin);
  auto* pipeline = app.add_subcommand("pipeline", "encode, ri, lin and emit SMT-LIB");
  add_common(pipeline);
  add_trace(pipeline);
  add_solver(pipeline);
  auto* check = app.add_subcommand("check", "Bounded counterexample search");
  add_common(check);
  check->add_option("--depth", o.depth, "Derivation depth bound");
  check->add_option("--budget", o.budget, "Resolvent budget");
  check->add_option("--jobs,-j", o.jobs, "Files checked in parallel");
  auto* verify = app.add_subcommand("verify", "Check a symbolic interpretation");
  add_common(verify);
  auto* emit = app.add_subcommand("emit", "Print a clause file as SMT-LIB");
  add_common(emit);
  add_solver(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    if (encode->parsed()) return cmd_encode(o);
    if (ri->parsed()) return cmd_transform(o, true);
    if (lin->parsed()) return cmd_transform(o, false);
    if (pipeline->parsed()) return cmd_pipeline(o);
    if (check->parsed()) return cmd_check(o);
    if (verify->parsed()) return cmd_verify(o);
    if (emit->parsed()) return cmd_emit(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hornlin::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kUnknown;
  } catch (const hornlin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main(int argc, char** argv) { return run(argc, argv); }
