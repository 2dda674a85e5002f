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

#ifndef HORNLIN_TESTS_TEST_UTIL_HPP
#define HORNLIN_TESTS_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "hornlin/encoder.hpp"
#include "hornlin/errors.hpp"
#include "hornlin/imp.hpp"
#include "hornlin/spec.hpp"
#include "hornlin/syntax.hpp"

namespace hornlin::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus(const std::string& rel) { return std::string(HORNLIN_CORPUS_DIR) + "/" + rel; }
inline std::string golden(const std::string& name) {
  return std::string(HORNLIN_TESTS_DIR) + "/golden/" + name;
}

inline ImpProgram load_program(const std::string& name) {
  return normalize_jumps(parse_imp(read_file(corpus("programs/" + name + ".imp"))));
}

inline SpecTriple load_spec(const std::string& name) {
  return parse_spec(read_file(corpus("specs/" + name + ".spec")));
}

inline ClauseSet load_pc(const std::string& name) {
  ImpProgram p = load_program(name);
  SpecTriple t = load_spec(name);
  return assemble_pc(encode_opsem(p, t), t);
}

inline ClauseSet load_golden(const std::string& name) { return parse_clauses(read_file(golden(name))); }

}  // namespace hornlin::testing

#endif  // HORNLIN_TESTS_TEST_UTIL_HPP
