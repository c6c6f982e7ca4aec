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

// Cross-validation of the characterisation formulas against the semantic
// definitions: every subset of a model is checked both ways.

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "dgsem/argumentation.hpp"
#include "dgsem/characterisation.hpp"
#include "dgsem/graph_json.hpp"
#include "dgsem/model_check.hpp"

namespace dgsem {

struct Family {
  enum class Kind : std::uint8_t { cf, cl, wcf, df, wdf, extension, distinct, cmps };

  Kind kind = Kind::cf;
  /// Used by Kind::extension.
  ExtensionSpec spec;
  std::string name;
};

/// A family name (CF, CL, WCF, DF, WDF, ADM, WADM, D-CMP, W-D-CMP, E-CMP,
/// item1..item12, DISTINCT, CMPS or sigma:tau:mu). Throws ParseError.
Family parse_family(std::string_view name);

/// Comma-separated names and groups: core, completeness, items, both, all.
std::vector<Family> parse_families(std::string_view list);

struct ValidateOptions {
  /// Refuse models with more nodes than this (BoundExceeded).
  std::size_t bound = kMaxGenerateN;
  /// Largest subset size checked.
  std::size_t max_k = std::numeric_limits<std::size_t>::max();
  /// Also ground each formula and compare the propositional verdict.
  bool check_grounding = false;
  /// Predicates (every arity) evaluated in the model while grounding.
  std::vector<std::string> fold = {kPD, kPAnnoEq};
  /// Corrupt the conflict-freeness schema (mutation testing).
  bool mutate_cf = false;
  EvalOptions eval;
};

struct Mismatch {
  /// "formula" (oracle vs. model check) or "grounding" (model check vs. ground formula).
  std::string kind;
  std::vector<std::string> set;
  /// CL: the full tuple; DISTINCT: the second set; CMPS: every block.
  std::vector<std::vector<std::string>> other;
  /// DF and WDF: the defended node.
  std::string node;
  bool expected = false;
  bool actual = false;
};

struct ValidationReport {
  std::string family;
  std::size_t cases = 0;
  std::size_t grounded = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

ValidationReport cross_validate(const EquivDungModel& m, const Family& family, const ValidateOptions& options = {});

json to_json(const ValidationReport& r);

}  // namespace dgsem
