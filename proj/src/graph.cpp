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

#include "dgsem/graph.hpp"

#include <array>
#include <string>

namespace dgsem {

namespace {

std::size_t max_index(const SkelItem& item) {
  if (const auto* p = std::get_if<Placeholder>(&item)) return p->index;
  return 0;
}

const std::string& apply(const SkelItem& item, std::span<const std::string> args) {
  if (const auto* p = std::get_if<Placeholder>(&item)) return args[p->index - 1];
  return std::get<std::string>(item);
}

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

std::set<std::string> annotations_of(const AnnotatedGraph& g) {
  std::set<std::string> out;
  for (const auto& [node, anno] : g.nodes()) out.insert(anno.begin(), anno.end());
  for (const auto& [edge, anno] : g.edges()) out.insert(anno.begin(), anno.end());
  return out;
}

std::vector<std::string> domain_of(const AnnotatedGraph& g) {
  std::set<std::string> all = annotations_of(g);
  for (const auto& [node, anno] : g.nodes()) all.insert(node);
  return {all.begin(), all.end()};
}

std::size_t degree_of(const SkeletonGraph& s) {
  std::set<std::size_t> seen;
  auto note = [&](const SkelItem& item) {
    if (auto i = max_index(item)) seen.insert(i);
  };
  for (const auto& [node, anno] : s.nodes()) {
    note(node);
    for (const auto& a : anno) note(a);
  }
  for (const auto& [edge, anno] : s.edges()) {
    for (const auto& a : anno) note(a);
  }
  if (seen.empty()) return 0;
  std::size_t n = *seen.rbegin();
  if (seen.size() != n) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (!seen.contains(j)) throw DegreeGapError("placeholder *" + std::to_string(j) + " is missing below *" + std::to_string(n));
    }
  }
  return n;
}

SkeletonGraph to_skeleton(const AnnotatedGraph& g) {
  SkeletonGraph s;
  for (const auto& [node, anno] : g.nodes()) s.add_node(node, {anno.begin(), anno.end()});
  for (const auto& [edge, anno] : g.edges()) s.add_edge(edge.first, edge.second, {anno.begin(), anno.end()});
  return s;
}

std::optional<AnnotatedGraph> try_substitute(const SkeletonGraph& s, std::span<const std::string> args) {
  std::size_t n = degree_of(s);
  if (args.size() != n) {
    throw ArityMismatch("skeleton of degree " + std::to_string(n) + " given " + std::to_string(args.size()) + " arguments");
  }
  AnnotatedGraph g;
  for (const auto& [node, anno] : s.nodes()) {
    const std::string& name = apply(node, args);
    if (g.has_node(name)) return std::nullopt;
    AnnotatedGraph::AnnoSet mapped;
    for (const auto& a : anno) mapped.insert(apply(a, args));
    g.add_node(name, mapped);
  }
  for (const auto& [edge, anno] : s.edges()) {
    AnnotatedGraph::AnnoSet mapped;
    for (const auto& a : anno) mapped.insert(apply(a, args));
    g.add_edge(apply(edge.first, args), apply(edge.second, args), mapped);
  }
  return g;
}

AnnotatedGraph substitute(const SkeletonGraph& s, std::span<const std::string> args) {
  auto g = try_substitute(s, args);
  if (!g) throw CollisionError("two skeleton nodes map to the same statement");
  return *std::move(g);
}

bool instantiates(std::span<const std::string> args, const SkeletonGraph& s, const AnnotatedGraph& m) {
  auto g = try_substitute(s, args);
  return g && leq(*g, m);
}

// ---------------------------------------------------------------------------

GraphIndex::GraphIndex(const AnnotatedGraph& g, std::span<const std::string> domain)
    : domain_(domain.begin(), domain.end()), is_node_(domain.size(), false), node_annos_(domain.size()) {
  for (std::uint32_t i = 0; i < domain_.size(); ++i) ids_.emplace(domain_[i], i);
  auto intern = [&](const std::string& s) {
    auto id = find(s);
    if (id == kAbsent) throw DomainError("'" + s + "' is not in the domain");
    return id;
  };
  for (const auto& [node, anno] : g.nodes()) {
    auto id = intern(node);
    is_node_[id] = true;
    for (const auto& a : anno) node_annos_[id].push_back(intern(a));
    std::sort(node_annos_[id].begin(), node_annos_[id].end());
  }
  for (const auto& [edge, anno] : g.edges()) {
    auto& annos = edges_[edge_key(intern(edge.first), intern(edge.second))];
    for (const auto& a : anno) annos.push_back(intern(a));
    std::sort(annos.begin(), annos.end());
  }
}

std::uint32_t GraphIndex::find(const std::string& s) const {
  auto it = ids_.find(s);
  return it == ids_.end() ? kAbsent : it->second;
}

bool GraphIndex::node_has(std::uint32_t node, std::uint32_t anno) const {
  if (!is_node(node)) return false;
  const auto& v = node_annos_[node];
  return std::binary_search(v.begin(), v.end(), anno);
}

const std::vector<std::uint32_t>* GraphIndex::edge(std::uint32_t a, std::uint32_t b) const {
  auto it = edges_.find(edge_key(a, b));
  return it == edges_.end() ? nullptr : &it->second;
}

CompiledSkeleton::CompiledSkeleton(const SkeletonGraph& s, const GraphIndex& index) : index_(&index) {
  auto slot = [&](const SkelItem& item) {
    if (const auto* p = std::get_if<Placeholder>(&item)) {
      degree_ = std::max(degree_, p->index);
      return Slot{true, static_cast<std::uint32_t>(p->index - 1)};
    }
    return Slot{false, index.find(std::get<std::string>(item))};
  };
  std::map<SkelItem, std::size_t> position;
  for (const auto& [node, anno] : s.nodes()) {
    position.emplace(node, nodes_.size());
    nodes_.push_back(slot(node));
    auto& annos = node_annos_.emplace_back();
    for (const auto& a : anno) annos.push_back(slot(a));
  }
  for (const auto& [edge, anno] : s.edges()) {
    EdgeSpec spec{position.at(edge.first), position.at(edge.second), {}};
    for (const auto& a : anno) spec.annos.push_back(slot(a));
    edges_.push_back(std::move(spec));
  }
}

Tri CompiledSkeleton::check(std::span<const std::uint32_t> args) const {
  bool partial = false;
  std::array<std::uint32_t, 32> small{};
  std::vector<std::uint32_t> large;
  std::uint32_t* values = small.data();
  if (nodes_.size() > small.size()) {
    large.resize(nodes_.size());
    values = large.data();
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::uint32_t v = resolve(nodes_[i], args);
    values[i] = v;
    if (v == kUnbound) {
      partial = true;
      continue;
    }
    if (!index_->is_node(v)) return Tri::no;
    for (std::size_t j = 0; j < i; ++j) {
      if (values[j] == v) return Tri::no;
    }
    for (const auto& a : node_annos_[i]) {
      std::uint32_t av = resolve(a, args);
      if (av == kUnbound) {
        partial = true;
      } else if (!index_->node_has(v, av)) {
        return Tri::no;
      }
    }
  }
  for (const auto& e : edges_) {
    std::uint32_t a = values[e.from];
    std::uint32_t b = values[e.to];
    if (a == kUnbound || b == kUnbound) {
      partial = true;
      continue;
    }
    const auto* annos = index_->edge(a, b);
    if (annos == nullptr) return Tri::no;
    for (const auto& slot : e.annos) {
      std::uint32_t av = resolve(slot, args);
      if (av == kUnbound) {
        partial = true;
      } else if (!std::binary_search(annos->begin(), annos->end(), av)) {
        return Tri::no;
      }
    }
  }
  return partial ? Tri::unknown : Tri::yes;
}

std::vector<std::vector<std::string>> instantiations(const SkeletonGraph& s, const AnnotatedGraph& m) {
  std::size_t n = degree_of(s);
  std::vector<std::string> domain = domain_of(m);
  GraphIndex index(m, domain);
  CompiledSkeleton compiled(s, index);
  std::vector<std::vector<std::string>> out;
  std::vector<std::uint32_t> args(n, kUnbound);
  // Depth-first over argument positions, cutting branches the partial check rules out.
  auto extend = [&](auto& self, std::size_t pos) -> void {
    Tri t = compiled.check(args);
    if (t == Tri::no) return;
    if (pos == n) {
      std::vector<std::string>& tuple = out.emplace_back();
      for (auto v : args) tuple.push_back(domain[v]);
      return;
    }
    for (std::uint32_t v = 0; v < domain.size(); ++v) {
      args[pos] = v;
      self(self, pos + 1);
    }
    args[pos] = kUnbound;
  };
  extend(extend, 0);
  return out;
}

}  // namespace dgsem
