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

#ifndef HORNLIN_EXTERNAL_HPP
#define HORNLIN_EXTERNAL_HPP

#include <optional>
#include <string>

namespace hornlin {

struct ExternalResult {
  enum Kind { Sat, Unsat, Unknown, Timeout, SolverError };
  Kind kind = SolverError;
  // Combined standard output and error of the solver.
  std::string output;
  double seconds = 0;
};

// Writes `script` to a temporary file and runs `<command> <file>`, where
// `command` is split on white space. The first of the tokens sat, unsat
// and unknown in the output decides the verdict. The solver is killed
// after `timeout_seconds`; a non-positive timeout gives Timeout without
// starting it.
ExternalResult run_external(const std::string& script, const std::string& command,
                            double timeout_seconds);

// `flag` when non-empty, else the HL_SOLVER environment variable, else
// nothing.
std::optional<std::string> configured_solver(const std::string& flag);

// Full path of an executable found on PATH.
std::optional<std::string> find_on_path(const std::string& name);

std::string to_string(ExternalResult::Kind k);

}  // namespace hornlin

#endif  // HORNLIN_EXTERNAL_HPP
