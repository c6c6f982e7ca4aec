// Copyright 2026 The dgsem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

#include "dgsem/characterisation.hpp"
#include "dgsem/formula.hpp"

namespace dgsem::testing {

// Random formulas over the standard predicates, closed by quantifiers.
class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  Formula closed(int depth) {
    Formula f = open(depth);
    for (const auto& v : free_vars(f)) f = pick(2) ? Formula::forall(v, f) : Formula::exists(v, f);
    return f;
  }

 private:
  Term var() { return Term::var(std::string(1, "xyz"[pick(3)])); }

  Formula open(int depth) {
    if (depth == 0 || pick(4) == 0) {
      switch (pick(6)) {
        case 0:
          return Formula::atom(kPA, {var(), var()});
        case 1:
          return Formula::atom(kPA, {var()});
        case 2:
          return Formula::atom(kPD, {var()});
        case 3:
          return Formula::atom(kPAnnoEq, {var(), var(), var()});
        case 4:
          return Formula::equal(var(), var());
        default:
          return Formula::atom(kPD, {var(), var()});
      }
    }
    switch (pick(6)) {
      case 0:
        return Formula::negation(open(depth - 1));
      case 1:
        return Formula::conjunction(open(depth - 1), open(depth - 1));
      case 2:
        return Formula::disjunction(open(depth - 1), open(depth - 1));
      case 3:
        return Formula::implication(open(depth - 1), open(depth - 1));
      case 4:
        return Formula::forall(std::string(1, "xyz"[pick(3)]), open(depth - 1));
      default:
        return Formula::exists(std::string(1, "xyz"[pick(3)]), open(depth - 1));
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

}  // namespace dgsem::testing
