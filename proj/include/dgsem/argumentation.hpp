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

// Equivalence-equipped Dung models: every node carries exactly one utterance
// ID and every edge is an attack. Nodes sharing an ID are equivalent.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dgsem/graph.hpp"

namespace dgsem {

inline constexpr const char* kAttacks = "attacks";

/// Subset of a model's nodes; bit i is the i-th node in sorted order.
using NodeSet = std::uint64_t;

enum class Sigma : std::uint8_t { simple, wide };
enum class Tau : std::uint8_t { defence, equivalence, both };
enum class Mu : std::uint8_t { admissible, complete, preferred, grounded, stable };

struct ExtensionSpec {
  Sigma sigma = Sigma::simple;
  Tau tau = Tau::defence;
  Mu mu = Mu::complete;

  auto operator<=>(const ExtensionSpec&) const = default;
};

std::string to_string(Sigma s);
std::string to_string(Tau t);
std::string to_string(Mu m);
/// "sigma:tau:mu", e.g. "wide:defence:complete".
std::string to_string(const ExtensionSpec& spec);
/// Inverse of to_string(ExtensionSpec); throws ParseError.
ExtensionSpec parse_spec(std::string_view text);

/// Default limit on the node count for subset enumeration.
inline constexpr std::size_t kDefaultBound = 20;

class EquivDungModel {
 public:
  /// Throws ModelInvariantError listing every violation.
  explicit EquivDungModel(AnnotatedGraph graph);

  /// Gives each node of a Dung graph its own ID ("ID:<node>") so that the
  /// equivalence is the identity.
  static EquivDungModel from_dung(const AnnotatedGraph& dung);

  /// Human-readable invariant violations, empty when g is a valid model.
  static std::vector<std::string> violations(const AnnotatedGraph& g);

  const AnnotatedGraph& graph() const { return graph_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& id_of(std::size_t node) const { return ids_[node]; }
  NodeSet all() const { return size() == 64 ? ~NodeSet{0} : (NodeSet{1} << size()) - 1; }

  /// Throws GraphError for a name that is not a node.
  NodeSet set_of(const std::vector<std::string>& nodes) const;
  std::vector<std::string> names_of(NodeSet s) const;
  std::size_t index_of(const std::string& node) const;

  NodeSet attackers(std::size_t node) const { return attackers_[node]; }
  NodeSet attacked_by(std::size_t node) const { return attacked_[node]; }

  NodeSet closure(NodeSet s) const;
  bool conflict_free(NodeSet s, Sigma sigma) const;
  bool defends(NodeSet s, std::size_t node, Sigma sigma) const;
  /// All nodes s σ-defends.
  NodeSet defended(NodeSet s, Sigma sigma) const;
  bool admissible(NodeSet s, Sigma sigma) const;
  bool closed_under_defence(NodeSet s, Sigma sigma) const;
  bool closed_under_equivalence(NodeSet s) const { return closure(s) == s; }
  /// σ-admissible and closed under τ (τ = both: under σ-defence and equivalence).
  bool complete(NodeSet s, Sigma sigma, Tau tau) const;
  /// Every node outside s has an incoming edge from s.
  bool attacks_rest(NodeSet s) const;

 private:
  AnnotatedGraph graph_;
  std::vector<std::string> names_;
  std::vector<std::string> ids_;
  std::vector<NodeSet> attackers_;
  std::vector<NodeSet> attacked_;
  std::vector<NodeSet> class_;
};

/// Sorted by size, then by member indices.
void sort_sets(std::vector<NodeSet>& sets);

/// Exactly the subsets that are spec-extensions, in sort_sets order.
/// Throws BoundExceeded when the model has more than `bound` nodes.
std::vector<NodeSet> enumerate_extensions(const EquivDungModel& m, const ExtensionSpec& spec,
                                          std::size_t bound = kDefaultBound);

bool is_extension(const EquivDungModel& m, NodeSet s, const ExtensionSpec& spec, std::size_t bound = kDefaultBound);

/// Minimal fixpoints over every expansion sequence from the empty set that at
/// each non-wide-defence-complete set adds a nonempty subset of the nodes it
/// wide-defends.
std::vector<NodeSet> grounded_via_lfp(const EquivDungModel& m, std::size_t bound = kDefaultBound);

}  // namespace dgsem
