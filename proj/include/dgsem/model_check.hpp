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

// Satisfaction of formulas in a discussion graph structure: an object-level
// annotated graph as domain of discourse plus an evaluation.

#include <optional>
#include <string>
#include <vector>

#include "dgsem/environment.hpp"
#include "dgsem/formula.hpp"
#include "dgsem/graph.hpp"

namespace dgsem {

/// Domain of discourse: a graph together with its nodes ∪ annotations.
class Model {
 public:
  explicit Model(AnnotatedGraph graph);

  const AnnotatedGraph& graph() const { return graph_; }
  const std::vector<std::string>& domain() const { return domain_; }
  const GraphIndex& index() const { return index_; }
  bool contains(const std::string& value) const { return index_.find(value) != kAbsent; }

 private:
  AnnotatedGraph graph_;
  std::vector<std::string> domain_;
  GraphIndex index_;
};

/// Search strategy. Both switches preserve the satisfaction relation; with
/// both off the checker enumerates every quantifier over the whole domain.
struct EvalOptions {
  /// Before enumerating a quantifier, evaluate its body three-valued with the
  /// bound variable unknown and stop early when the result is already fixed.
  bool prune = true;
  /// Cache quantified subformulas by the values of their free variables.
  bool memoize = true;
};

std::string eval_term(const Model& m, const Interpretation& interp, const Assignment& assign, const Term& t);

bool satisfies(const Model& m, const Interpretation& interp, const Assignment& assign, const Formula& f,
               EvalOptions options = {});

/// Closed formulas only; throws NotClosedError otherwise.
bool satisfies_closed(const Model& m, const Interpretation& interp, const Formula& f, EvalOptions options = {});

/// Values for the outermost run of existential quantifiers.
struct Witness {
  std::vector<std::string> vars;
  std::vector<std::string> values;
};

/// The first satisfying tuple (in domain order) for the outermost ∃ prefix of
/// f, or nullopt when f is false. The prefix may be empty.
std::optional<Witness> find_witness(const Model& m, const Interpretation& interp, const Assignment& assign,
                                    const Formula& f, EvalOptions options = {});

}  // namespace dgsem
