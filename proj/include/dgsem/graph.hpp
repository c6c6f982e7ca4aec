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

// Object-level and skeleton annotated graphs, the subgraph-with-annotations
// order, placeholder substitution and instantiability.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "dgsem/errors.hpp"

namespace dgsem {

/// The special natural number *i (i >= 1).
struct Placeholder {
  std::size_t index = 1;

  auto operator<=>(const Placeholder&) const = default;
};

/// A skeleton statement or skeleton annotation.
using SkelItem = std::variant<std::string, Placeholder>;

inline bool is_placeholder(const SkelItem& item) { return std::holds_alternative<Placeholder>(item); }

/// Directed graph with a set of annotations on every node and every edge.
/// Annotation sets exist for exactly the nodes and edges present (possibly
/// empty), and every edge endpoint is a node.
template <class Item>
class BasicGraph {
 public:
  using item_type = Item;
  using Edge = std::pair<Item, Item>;
  using AnnoSet = std::set<Item>;

  /// Adds a node, or merges `anno` into an existing node's annotations.
  void add_node(const Item& node, const AnnoSet& anno = {}) { nodes_[node].insert(anno.begin(), anno.end()); }

  /// Adds an edge, or merges `anno` into its annotations. Both endpoints must
  /// already be nodes.
  void add_edge(const Item& from, const Item& to, const AnnoSet& anno = {}) {
    if (!has_node(from) || !has_node(to)) throw GraphError("edge endpoint is not a node");
    edges_[Edge{from, to}].insert(anno.begin(), anno.end());
  }

  void remove_node(const Item& node) {
    nodes_.erase(node);
    std::erase_if(edges_, [&](const auto& e) { return e.first.first == node || e.first.second == node; });
  }

  void remove_edge(const Item& from, const Item& to) { edges_.erase(Edge{from, to}); }

  AnnoSet& node_anno(const Item& node) {
    auto it = nodes_.find(node);
    if (it == nodes_.end()) throw GraphError("no such node");
    return it->second;
  }
  const AnnoSet& node_anno(const Item& node) const {
    auto it = nodes_.find(node);
    if (it == nodes_.end()) throw GraphError("no such node");
    return it->second;
  }
  AnnoSet& edge_anno(const Item& from, const Item& to) {
    auto it = edges_.find(Edge{from, to});
    if (it == edges_.end()) throw GraphError("no such edge");
    return it->second;
  }
  const AnnoSet& edge_anno(const Item& from, const Item& to) const {
    auto it = edges_.find(Edge{from, to});
    if (it == edges_.end()) throw GraphError("no such edge");
    return it->second;
  }

  bool has_node(const Item& node) const { return nodes_.contains(node); }
  bool has_edge(const Item& from, const Item& to) const { return edges_.contains(Edge{from, to}); }

  const std::map<Item, AnnoSet>& nodes() const { return nodes_; }
  const std::map<Edge, AnnoSet>& edges() const { return edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool operator==(const BasicGraph&) const = default;

 private:
  std::map<Item, AnnoSet> nodes_;
  std::map<Edge, AnnoSet> edges_;
};

using AnnotatedGraph = BasicGraph<std::string>;
using SkeletonGraph = BasicGraph<SkelItem>;

/// g1 ⊴ g2: nodes and edges of g1 are included in g2 and every annotation
/// set of g1 is included in the corresponding one of g2.
template <class Item>
bool leq(const BasicGraph<Item>& g1, const BasicGraph<Item>& g2) {
  for (const auto& [node, anno] : g1.nodes()) {
    auto it = g2.nodes().find(node);
    if (it == g2.nodes().end()) return false;
    if (!std::includes(it->second.begin(), it->second.end(), anno.begin(), anno.end())) return false;
  }
  for (const auto& [edge, anno] : g1.edges()) {
    auto it = g2.edges().find(edge);
    if (it == g2.edges().end()) return false;
    if (!std::includes(it->second.begin(), it->second.end(), anno.begin(), anno.end())) return false;
  }
  return true;
}

/// All annotation strings on nodes and edges.
std::set<std::string> annotations_of(const AnnotatedGraph& g);

/// The domain of discourse: nodes ∪ annotations, sorted and unique.
std::vector<std::string> domain_of(const AnnotatedGraph& g);

/// Largest placeholder index, 0 when there is none.
/// Throws DegreeGapError if some *j below the maximum does not occur.
std::size_t degree_of(const SkeletonGraph& s);

/// Lossless embedding of an object-level graph as a degree-0 skeleton.
SkeletonGraph to_skeleton(const AnnotatedGraph& g);

/// Replaces every *i by args[i-1]. Annotation sets collapse when two items
/// map to the same string; two distinct skeleton nodes mapping to the same
/// string throw CollisionError. Throws ArityMismatch unless
/// args.size() == degree_of(s).
AnnotatedGraph substitute(const SkeletonGraph& s, std::span<const std::string> args);

/// substitute() without the collision exception.
std::optional<AnnotatedGraph> try_substitute(const SkeletonGraph& s, std::span<const std::string> args);

/// args instantiates s below m. Collisions yield false.
bool instantiates(std::span<const std::string> args, const SkeletonGraph& s, const AnnotatedGraph& m);

// ---------------------------------------------------------------------------
// Indexed instantiation. Model checking and matching ask the same
// instantiability question millions of times; these types answer it over
// interned domain values without building the substituted graph.

enum class Tri : std::uint8_t { no, yes, unknown };

inline constexpr std::uint32_t kUnbound = 0xFFFFFFFFu;
inline constexpr std::uint32_t kAbsent = 0xFFFFFFFEu;

/// Interned view of an object-level graph over a fixed domain.
class GraphIndex {
 public:
  /// `domain` must contain every node and annotation of `g`.
  GraphIndex(const AnnotatedGraph& g, std::span<const std::string> domain);

  std::size_t domain_size() const { return domain_.size(); }
  const std::string& value(std::uint32_t id) const { return domain_[id]; }
  /// Domain index of `s`, or kAbsent.
  std::uint32_t find(const std::string& s) const;

  bool is_node(std::uint32_t v) const { return v < is_node_.size() && is_node_[v]; }
  bool node_has(std::uint32_t node, std::uint32_t anno) const;
  /// Annotations of edge (a, b), or nullptr if absent.
  const std::vector<std::uint32_t>* edge(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<std::string> domain_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<bool> is_node_;
  std::vector<std::vector<std::uint32_t>> node_annos_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> edges_;
};

/// A skeleton graph resolved against a GraphIndex. Placeholder *i reads
/// argument i-1; concrete items are interned (kAbsent when outside the
/// domain). Callers may pass more arguments than the degree.
class CompiledSkeleton {
 public:
  CompiledSkeleton(const SkeletonGraph& s, const GraphIndex& index);

  std::size_t degree() const { return degree_; }

  /// Decides instantiability for fully bound args. With kUnbound entries the
  /// result is `no` only if every completion fails, `unknown` otherwise.
  Tri check(std::span<const std::uint32_t> args) const;

 private:
  struct Slot {
    bool placeholder;
    std::uint32_t value;  // argument position or interned value
  };
  struct EdgeSpec {
    std::size_t from;
    std::size_t to;
    std::vector<Slot> annos;
  };

  static std::uint32_t resolve(const Slot& s, std::span<const std::uint32_t> args) {
    return s.placeholder ? args[s.value] : s.value;
  }

  const GraphIndex* index_;
  std::size_t degree_ = 0;
  std::vector<Slot> nodes_;
  std::vector<std::vector<Slot>> node_annos_;
  std::vector<EdgeSpec> edges_;
};

/// Every tuple over domain_of(m) that instantiates s below m, in
/// lexicographic domain order. Degree 0 gives {()} or {}.
std::vector<std::vector<std::string>> instantiations(const SkeletonGraph& s, const AnnotatedGraph& m);

}  // namespace dgsem
