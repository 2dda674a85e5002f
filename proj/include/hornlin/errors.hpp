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

#ifndef HORNLIN_ERRORS_HPP
#define HORNLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hornlin {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in clause, program, spec, solution or SMT-LIB text.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Ill-formed clause set (arity clash, bad predicate use).
class ClauseError : public Error {
 public:
  using Error::Error;
};

// Violation of a specification invariant (partition, bindings).
class SpecError : public Error {
 public:
  using Error::Error;
};

// Program cannot be encoded (not normalized, bad labels).
class EncodeError : public Error {
 public:
  using Error::Error;
};

// Transformation precondition failure.
class TransformError : public Error {
 public:
  using Error::Error;
};

// Symbolic interpretation does not fit the clause set.
class SolutionError : public Error {
 public:
  using Error::Error;
};

// Constraint elimination exceeded its row budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace hornlin

#endif  // HORNLIN_ERRORS_HPP
