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

// Grounding of closed formulas over a finite model into propositional logic,
// and CNF output via the Tseitin transformation.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgsem/environment.hpp"
#include "dgsem/formula.hpp"
#include "dgsem/model_check.hpp"

namespace dgsem {

enum class PropKind : std::uint8_t { top, bottom, var, negation, conjunction, disjunction, implication };

class PropArena;

/// Hash-consed propositional formula. Structurally equal subformulas built in
/// the same arena share one node.
class PropFormula {
 public:
  PropFormula(std::shared_ptr<const PropArena> arena, std::uint32_t root) : arena_(std::move(arena)), root_(root) {}

  PropKind kind() const;
  const std::string& var_name() const;
  PropFormula child(std::size_t i) const;
  std::size_t child_count() const;

  /// Distinct nodes reachable from the root.
  std::size_t size() const;
  /// Names of the propositional variables occurring in the formula.
  std::set<std::string> vars() const;

  const PropArena& arena() const { return *arena_; }
  std::uint32_t root() const { return root_; }

 private:
  std::shared_ptr<const PropArena> arena_;
  std::uint32_t root_;
};

class PropArena {
 public:
  using Ref = std::uint32_t;

  PropArena();

  Ref top() const { return 0; }
  Ref bottom() const { return 1; }
  Ref var(const std::string& name);
  Ref negation(Ref a);
  Ref conjunction(Ref a, Ref b);
  Ref disjunction(Ref a, Ref b);
  Ref implication(Ref a, Ref b);

  PropKind kind(Ref r) const { return nodes_[r].kind; }
  Ref lhs(Ref r) const { return nodes_[r].a; }
  Ref rhs(Ref r) const { return nodes_[r].b; }
  const std::string& var_name(Ref r) const { return vars_[nodes_[r].a]; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    PropKind kind;
    Ref a;
    Ref b;
  };
  Ref intern(PropKind kind, Ref a, Ref b);

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, Ref> table_;
  std::vector<std::string> vars_;
  std::map<std::string, Ref> var_ids_;
};

struct GroundOptions {
  /// Predicates evaluated in the model during grounding instead of becoming
  /// variables. Their atoms turn into ⊤ or ⊥ and fold away.
  std::set<SymbolRef> fold_predicates;
};

/// Propositional formula equivalent to f in m under every valuation that
/// agrees with m on the atoms. f must be closed (NotClosedError).
PropFormula ground(const Model& m, const Interpretation& interp, const Formula& f, const GroundOptions& options = {});

using Valuation = std::map<std::string, bool>;

/// Canonical variable name "p/n(v1,...,vn)". A graph literal is written as
/// its JSON skeleton in brackets in place of p. Backslash escapes '\\', '/',
/// ',', '(' and ')' inside names and values.
std::string atom_name(const std::string& predicate, const std::vector<std::string>& values);
std::string literal_atom_name(const SkeletonGraph& literal, const std::vector<std::string>& values);

/// Truth value in m of every named ground atom. Throws DecodeError for a
/// name that is malformed or refers to an uninterpreted predicate.
Valuation induced_valuation(const Model& m, const Interpretation& interp, const std::set<std::string>& vars);
Valuation induced_valuation(const Model& m, const Interpretation& interp, const PropFormula& p);

/// Throws MissingVar when the valuation lacks a variable of p.
bool eval_prop(const PropFormula& p, const Valuation& v);

std::string to_text(const PropFormula& p);

struct Dimacs {
  /// Header, a comment line per variable, then the clauses.
  std::string cnf;
  /// Variable name to DIMACS index, for the original (non-auxiliary) variables.
  std::map<std::string, int> variables;
  int num_vars = 0;
  std::size_t num_clauses = 0;
};

/// Tseitin CNF, equisatisfiable with p.
Dimacs to_dimacs(const PropFormula& p);

/// {"variables": {name: index}, "num_vars": n, "num_clauses": m}
json dimacs_sidecar(const Dimacs& d);

}  // namespace dgsem
