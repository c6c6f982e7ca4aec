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

// Seeded random equivalence-equipped Dung models for property testing.

#include <cstddef>
#include <cstdint>
#include <random>

#include "dgsem/graph.hpp"

namespace dgsem {

struct RandomModelOptions {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 7;
  /// Probability of each ordered pair (self-loops included) being an attack.
  double edge_probability = 0.3;
  /// Give every node its own ID instead of drawing from a smaller alphabet.
  bool distinct_ids = false;
};

/// Nodes u1..un, IDs ID1..IDa with a uniform in [1, n], every edge {attacks}.
AnnotatedGraph random_equiv_dung(std::mt19937_64& rng, const RandomModelOptions& options = {});

/// The i-th model of a seeded sequence; same (seed, i, options) gives the same graph.
AnnotatedGraph random_equiv_dung(std::uint64_t seed, std::size_t i, const RandomModelOptions& options = {});

}  // namespace dgsem
