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

#ifndef HORNLIN_RATIONAL_HPP
#define HORNLIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hornlin {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_of(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_of(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace hornlin

#endif  // HORNLIN_RATIONAL_HPP
