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

#include "dgsem/random_models.hpp"

#include <string>
#include <vector>

#include "dgsem/argumentation.hpp"
#include "dgsem/errors.hpp"

namespace dgsem {

AnnotatedGraph random_equiv_dung(std::mt19937_64& rng, const RandomModelOptions& options) {
  if (options.min_nodes < 1 || options.min_nodes > options.max_nodes) throw Error("invalid node count range");
  std::size_t n = std::uniform_int_distribution<std::size_t>(options.min_nodes, options.max_nodes)(rng);
  std::size_t alphabet = options.distinct_ids ? n : std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::uniform_int_distribution<std::size_t> pick_id(1, alphabet);
  std::bernoulli_distribution edge(options.edge_probability);

  AnnotatedGraph g;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("u" + std::to_string(i));
    std::size_t id = options.distinct_ids ? i : pick_id(rng);
    g.add_node(names.back(), {"ID" + std::to_string(id)});
  }
  for (const auto& from : names) {
    for (const auto& to : names) {
      if (edge(rng)) g.add_edge(from, to, {kAttacks});
    }
  }
  return g;
}

AnnotatedGraph random_equiv_dung(std::uint64_t seed, std::size_t i, const RandomModelOptions& options) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i)};
  std::mt19937_64 rng(seq);
  return random_equiv_dung(rng, options);
}

}  // namespace dgsem
