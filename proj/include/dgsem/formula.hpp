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

// Terms and formulas of first-order logic with equality, including atoms
// whose predicate is written as a skeleton typed discussion graph.

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dgsem/graph.hpp"

namespace dgsem {

/// A variable, or a function symbol applied to terms (a constant when the
/// argument list is empty).
struct Term {
  enum class Kind : std::uint8_t { variable, apply };

  Kind kind = Kind::apply;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string name) { return {Kind::variable, std::move(name), {}}; }
  static Term constant(std::string name) { return {Kind::apply, std::move(name), {}}; }
  static Term apply(std::string name, std::vector<Term> args) { return {Kind::apply, std::move(name), std::move(args)}; }

  bool is_variable() const { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

/// Predicate identity: the same name may be used at several arities.
struct SymbolRef {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const SymbolRef&) const = default;
};

using TypedItem = std::variant<Term, Placeholder>;
/// Skeleton typed discussion graph: nodes and typings are terms or placeholders.
using TypedDiscussionGraph = BasicGraph<TypedItem>;

std::size_t degree_of(const TypedDiscussionGraph& g);

enum class FormulaKind : std::uint8_t { atom, equal, top, bottom, negation, conjunction, disjunction, implication, forall, exists };

/// Immutable formula tree with shared subtrees. Copies are cheap.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string predicate, std::vector<Term> args);
  static Formula graph_atom(TypedDiscussionGraph literal, std::vector<Term> args);
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  FormulaKind kind() const { return node_->kind; }

  /// Atom accessors. A graph atom has an empty predicate name.
  const std::string& predicate() const { return node_->name; }
  const TypedDiscussionGraph* literal() const { return node_->literal.get(); }
  const std::vector<Term>& args() const { return node_->terms; }
  SymbolRef symbol() const { return {node_->name, node_->terms.size()}; }

  /// Equality accessors.
  const Term& lhs_term() const { return node_->terms[0]; }
  const Term& rhs_term() const { return node_->terms[1]; }

  /// Connective accessors: negation and quantifiers use child(0).
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  std::size_t child_count() const { return node_->children.size(); }

  /// Bound variable of a quantifier.
  const std::string& var() const { return node_->name; }

  /// Identity of the shared node, usable as a cache key.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const TypedDiscussionGraph> literal;
    std::vector<Term> terms;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Left-nested conjunction; ⊤ when empty.
Formula big_and(const std::vector<Formula>& fs);
/// Left-nested disjunction; ⊥ when empty.
Formula big_or(const std::vector<Formula>& fs);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool is_well_formed(const Formula& f);

/// Every (name, arity) predicate symbol occurring in f.
std::set<SymbolRef> predicate_symbols(const Formula& f);
/// Every (name, arity) function symbol occurring in f, constants included.
std::set<SymbolRef> function_symbols(const Formula& f);

/// Number of nodes in the formula tree (shared subtrees counted each time).
std::size_t formula_size(const Formula& f);

/// Canonical ASCII text. parse_formula(to_text(f)) == f.
std::string to_text(const Term& t);
std::string to_text(const Formula& f);
std::string to_text(const TypedItem& item);

}  // namespace dgsem
