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

#include "dgsem/argumentation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace dgsem {

std::string to_string(Sigma s) { return s == Sigma::simple ? "simple" : "wide"; }

std::string to_string(Tau t) {
  switch (t) {
    case Tau::defence:
      return "defence";
    case Tau::equivalence:
      return "equivalence";
    case Tau::both:
      return "both";
  }
  return {};
}

std::string to_string(Mu m) {
  switch (m) {
    case Mu::admissible:
      return "admissible";
    case Mu::complete:
      return "complete";
    case Mu::preferred:
      return "preferred";
    case Mu::grounded:
      return "grounded";
    case Mu::stable:
      return "stable";
  }
  return {};
}

std::string to_string(const ExtensionSpec& spec) {
  return to_string(spec.sigma) + ":" + to_string(spec.tau) + ":" + to_string(spec.mu);
}

ExtensionSpec parse_spec(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t colon = text.find(':', start);
    parts.emplace_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw ParseError("spec must have the form sigma:tau:mu", 0, {"sigma:tau:mu"});
  ExtensionSpec spec;
  std::size_t offset = 0;
  auto pick = [&](const std::string& word, const std::vector<std::string>& options) -> std::size_t {
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i] == word) return i;
    }
    throw ParseError("unknown spec component '" + word + "'", offset, options);
  };
  spec.sigma = static_cast<Sigma>(pick(parts[0], {"simple", "wide"}));
  offset += parts[0].size() + 1;
  spec.tau = static_cast<Tau>(pick(parts[1], {"defence", "equivalence", "both"}));
  offset += parts[1].size() + 1;
  spec.mu = static_cast<Mu>(pick(parts[2], {"admissible", "complete", "preferred", "grounded", "stable"}));
  return spec;
}

// ---------------------------------------------------------------------------

std::vector<std::string> EquivDungModel::violations(const AnnotatedGraph& g) {
  std::vector<std::string> out;
  if (g.node_count() > 64) out.push_back("model has more than 64 nodes");
  for (const auto& [node, anno] : g.nodes()) {
    if (anno.size() != 1) {
      out.push_back("node '" + node + "' has " + std::to_string(anno.size()) + " annotations, expected exactly one ID");
    }
  }
  for (const auto& [edge, anno] : g.edges()) {
    if (anno != std::set<std::string>{kAttacks}) {
      out.push_back("edge '" + edge.first + "' -> '" + edge.second + "' must be annotated exactly {attacks}");
    }
  }
  return out;
}

EquivDungModel::EquivDungModel(AnnotatedGraph graph) : graph_(std::move(graph)) {
  auto problems = violations(graph_);
  if (!problems.empty()) throw ModelInvariantError("not an equivalence-equipped Dung model", std::move(problems));
  for (const auto& [node, anno] : graph_.nodes()) {
    names_.push_back(node);
    ids_.push_back(*anno.begin());
  }
  const std::size_t n = names_.size();
  attackers_.assign(n, 0);
  attacked_.assign(n, 0);
  class_.assign(n, 0);
  for (const auto& [edge, anno] : graph_.edges()) {
    std::size_t a = index_of(edge.first);
    std::size_t b = index_of(edge.second);
    attackers_[b] |= NodeSet{1} << a;
    attacked_[a] |= NodeSet{1} << b;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ids_[i] == ids_[j]) class_[i] |= NodeSet{1} << j;
    }
  }
}

EquivDungModel EquivDungModel::from_dung(const AnnotatedGraph& dung) {
  AnnotatedGraph g;
  for (const auto& [node, anno] : dung.nodes()) g.add_node(node, {"ID:" + node});
  for (const auto& [edge, anno] : dung.edges()) g.add_edge(edge.first, edge.second, anno);
  return EquivDungModel(std::move(g));
}

std::size_t EquivDungModel::index_of(const std::string& node) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), node);
  if (it == names_.end() || *it != node) throw GraphError("'" + node + "' is not a node of the model");
  return static_cast<std::size_t>(it - names_.begin());
}

NodeSet EquivDungModel::set_of(const std::vector<std::string>& nodes) const {
  NodeSet s = 0;
  for (const auto& n : nodes) s |= NodeSet{1} << index_of(n);
  return s;
}

std::vector<std::string> EquivDungModel::names_of(NodeSet s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (s >> i & 1) out.push_back(names_[i]);
  }
  return out;
}

NodeSet EquivDungModel::closure(NodeSet s) const {
  NodeSet out = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (s >> i & 1) out |= class_[i];
  }
  return out;
}

bool EquivDungModel::conflict_free(NodeSet s, Sigma sigma) const {
  NodeSet t = sigma == Sigma::wide ? closure(s) : s;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if ((t >> i & 1) && (attacked_[i] & t) != 0) return false;
  }
  return true;
}

namespace {

bool simple_defends(const std::vector<NodeSet>& attackers, NodeSet s, std::size_t node) {
  NodeSet a = attackers[node];
  while (a != 0) {
    std::size_t attacker = static_cast<std::size_t>(std::countr_zero(a));
    a &= a - 1;
    if ((attackers[attacker] & s) == 0) return false;
  }
  return true;
}

}  // namespace

bool EquivDungModel::defends(NodeSet s, std::size_t node, Sigma sigma) const {
  if (sigma == Sigma::simple) return simple_defends(attackers_, s, node);
  NodeSet members = class_[node];
  while (members != 0) {
    std::size_t m = static_cast<std::size_t>(std::countr_zero(members));
    members &= members - 1;
    if (!simple_defends(attackers_, s, m)) return false;
  }
  return true;
}

NodeSet EquivDungModel::defended(NodeSet s, Sigma sigma) const {
  NodeSet out = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (defends(s, i, sigma)) out |= NodeSet{1} << i;
  }
  return out;
}

bool EquivDungModel::admissible(NodeSet s, Sigma sigma) const {
  if (!conflict_free(s, sigma)) return false;
  return (defended(s, sigma) & s) == s;
}

bool EquivDungModel::closed_under_defence(NodeSet s, Sigma sigma) const { return (defended(s, sigma) & ~s) == 0; }

bool EquivDungModel::complete(NodeSet s, Sigma sigma, Tau tau) const {
  if (!admissible(s, sigma)) return false;
  if (tau != Tau::equivalence && !closed_under_defence(s, sigma)) return false;
  if (tau != Tau::defence && !closed_under_equivalence(s)) return false;
  return true;
}

bool EquivDungModel::attacks_rest(NodeSet s) const {
  NodeSet hit = s;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (s >> i & 1) hit |= attacked_[i];
  }
  return hit == all();
}

// ---------------------------------------------------------------------------

void sort_sets(std::vector<NodeSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](NodeSet a, NodeSet b) {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    // Lexicographic on member indices: the lowest differing bit decides.
    NodeSet diff = a ^ b;
    if (diff == 0) return false;
    NodeSet low = diff & (~diff + 1);
    return (a & low) != 0;
  });
}

namespace {

void check_bound(const EquivDungModel& m, std::size_t bound) {
  if (m.size() > bound || m.size() > 30) {
    throw BoundExceeded("model has " + std::to_string(m.size()) + " nodes; enumeration bound is " +
                        std::to_string(std::min<std::size_t>(bound, 30)));
  }
}

std::vector<NodeSet> subsets_where(const EquivDungModel& m, auto pred) {
  std::vector<NodeSet> out;
  for (NodeSet s = 0; s <= m.all(); ++s) {
    if (pred(s)) out.push_back(s);
  }
  return out;
}

std::vector<NodeSet> maximal(const std::vector<NodeSet>& sets) {
  std::vector<NodeSet> out;
  for (NodeSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](NodeSet t) { return t != s && (s & t) == s; });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<NodeSet> minimal(const std::vector<NodeSet>& sets) {
  std::vector<NodeSet> out;
  for (NodeSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](NodeSet t) { return t != s && (s & t) == t; });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<NodeSet> enumerate_extensions(const EquivDungModel& m, const ExtensionSpec& spec, std::size_t bound) {
  check_bound(m, bound);
  std::vector<NodeSet> out;
  if (spec.mu == Mu::admissible) {
    out = subsets_where(m, [&](NodeSet s) { return m.admissible(s, spec.sigma); });
  } else {
    auto complete = subsets_where(m, [&](NodeSet s) { return m.complete(s, spec.sigma, spec.tau); });
    switch (spec.mu) {
      case Mu::complete:
        out = std::move(complete);
        break;
      case Mu::preferred:
        out = maximal(complete);
        break;
      case Mu::grounded:
        out = minimal(complete);
        break;
      case Mu::stable:
        for (NodeSet s : complete) {
          if (m.attacks_rest(s)) out.push_back(s);
        }
        break;
      case Mu::admissible:
        break;
    }
  }
  sort_sets(out);
  return out;
}

bool is_extension(const EquivDungModel& m, NodeSet s, const ExtensionSpec& spec, std::size_t bound) {
  if ((s & ~m.all()) != 0) throw GraphError("set is not a subset of the model's nodes");
  switch (spec.mu) {
    case Mu::admissible:
      return m.admissible(s, spec.sigma);
    case Mu::complete:
      return m.complete(s, spec.sigma, spec.tau);
    case Mu::stable:
      return m.complete(s, spec.sigma, spec.tau) && m.attacks_rest(s);
    case Mu::preferred:
    case Mu::grounded: {
      if (!m.complete(s, spec.sigma, spec.tau)) return false;
      auto all = enumerate_extensions(m, spec, bound);
      return std::find(all.begin(), all.end(), s) != all.end();
    }
  }
  return false;
}

std::vector<NodeSet> grounded_via_lfp(const EquivDungModel& m, std::size_t bound) {
  check_bound(m, bound);
  std::set<NodeSet> fixpoints;
  std::unordered_set<NodeSet> visited;
  std::vector<NodeSet> stack{0};
  while (!stack.empty()) {
    NodeSet s = stack.back();
    stack.pop_back();
    if (!visited.insert(s).second) continue;
    if (m.complete(s, Sigma::wide, Tau::defence)) {
      fixpoints.insert(s);
      continue;
    }
    NodeSet additions = m.defended(s, Sigma::wide) & ~s;
    // Every nonempty subset of the newly defended nodes.
    for (NodeSet a = additions; a != 0; a = (a - 1) & additions) stack.push_back(s | a);
  }
  std::vector<NodeSet> out = minimal({fixpoints.begin(), fixpoints.end()});
  sort_sets(out);
  return out;
}

}  // namespace dgsem
