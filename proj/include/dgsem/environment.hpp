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

// Interpretations of function and predicate symbols, and their JSON form:
//
//   {"constants": {"c": "u1", ...},
//    "functions": [{"name": "f", "arity": 1, "table": [{"args": ["u1"], "value": "ID1"}]}],
//    "predicates": [{"name": "p", "arity": 2, "graph": <skeleton graph>}]}

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgsem/formula.hpp"
#include "dgsem/graph_json.hpp"

namespace dgsem {

using FunctionTable = std::map<std::vector<std::string>, std::string>;

class Interpretation {
 public:
  /// Binds a constant (arity-0 function symbol).
  void set_constant(const std::string& name, const std::string& value);
  /// Binds an arity-n function symbol to a finite table; n >= 1.
  void set_function(const std::string& name, std::size_t arity, FunctionTable table);
  /// Binds (name, arity) to a skeleton graph of degree exactly `arity`.
  void set_predicate(const std::string& name, std::size_t arity, SkeletonGraph graph);

  const std::string* constant(const std::string& name) const;
  const FunctionTable* function(const std::string& name, std::size_t arity) const;
  const SkeletonGraph* predicate(const std::string& name, std::size_t arity) const;

  const std::map<std::string, std::string>& constants() const { return constants_; }
  const std::map<SymbolRef, FunctionTable>& functions() const { return functions_; }
  const std::map<SymbolRef, SkeletonGraph>& predicates() const { return predicates_; }

 private:
  std::map<std::string, std::string> constants_;
  std::map<SymbolRef, FunctionTable> functions_;
  std::map<SymbolRef, SkeletonGraph> predicates_;
};

/// Variable assignment.
using Assignment = std::map<std::string, std::string>;

Interpretation interpretation_from_json(const json& j);
json to_json(const Interpretation& interp);
Interpretation load_interpretation(const std::filesystem::path& path);

}  // namespace dgsem
