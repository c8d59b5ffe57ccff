// Copyright 2026 The efnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random strategy profiles for experiments and property checks.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "efnc/game.hpp"
#include "efnc/generators.hpp"

namespace efnc {

// Each vertex of [0, n) kept with probability p.
inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p = 0.5,
                               std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (v != skip && unit_draw(rng) < p) members.push_back(v);
  return VertexSet(std::move(members));
}

inline Level2Profile random_level2_profile(std::mt19937_64& rng, std::size_t n1, std::size_t n2,
                                           double p = 0.5) {
  Level2Profile profile;
  for (std::size_t j = 0; j < n2; ++j) profile.strategies.push_back(random_subset(rng, n1, p));
  return profile;
}

inline Level1Profile random_level1_profile(std::mt19937_64& rng, std::size_t n1, double p = 0.4) {
  Level1Profile profile;
  for (Vertex i = 0; i < n1; ++i) profile.strategies.push_back(random_subset(rng, n1, p, i));
  return profile;
}

// Redraws until the induced G1 is connected.
inline Level1Profile random_connected_level1_profile(std::mt19937_64& rng, std::size_t n1,
                                                     double p = 0.4,
                                                     std::size_t max_retries = 10000) {
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    auto profile = random_level1_profile(rng, n1, p);
    if (n1 == 0 || is_connected(build_level1_graph(profile))) return profile;
  }
  throw GenerationError("no connected level-1 profile within the retry budget");
}

// Connected G(n, p) with n drawn uniformly from [n_min, n_max].
inline Graph random_connected_graph(std::uint64_t seed, std::size_t n_min, std::size_t n_max,
                                    double p = 0.4) {
  std::mt19937_64 rng(seed);
  const std::size_t n = n_min + rng() % (n_max - n_min + 1);
  return erdos_renyi_graph(n, p, rng(), /*require_connected=*/true);
}

}  // namespace efnc
