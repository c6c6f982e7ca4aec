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

// Shared helpers for the test suites.

#include <filesystem>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dgsem/graph.hpp"

namespace dgsem::testing {

inline std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(DGSEM_DATA_DIR) / name; }

struct NodeSpec {
  std::string id;
  std::set<std::string> anno;
};

struct EdgeSpec {
  std::string from;
  std::string to;
  std::set<std::string> anno;
};

inline AnnotatedGraph make_graph(std::initializer_list<NodeSpec> nodes, std::initializer_list<EdgeSpec> edges = {}) {
  AnnotatedGraph g;
  for (const auto& n : nodes) g.add_node(n.id, n.anno);
  for (const auto& e : edges) g.add_edge(e.from, e.to, e.anno);
  return g;
}

using Sets = std::vector<std::vector<std::string>>;

/// Sorted copy of every inner list and of the outer list, for order-free comparison.
inline std::set<std::set<std::string>> as_family(const Sets& sets) {
  std::set<std::set<std::string>> out;
  for (const auto& s : sets) out.emplace(s.begin(), s.end());
  return out;
}

}  // namespace dgsem::testing
