/*
 * Copyright 2026 The dihull authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dihull/io.hpp"
#include "dihull/linops.hpp"

namespace dihull {

// All randomness flows through a seeded engine; raw engine draws are reduced
// by modulo so corpora are bit-identical across platforms.
using Rng = std::mt19937_64;

inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }

AsymGauge<Rat> gauge_u_line();
AsymGauge<Rat> gauge_abs_line();
AsymGauge<Rat> gauge_max_2d();
// {[1,0],[0,1],[-1,-1]}: a genuinely asymmetric norm on the plane.
AsymGauge<Rat> gauge_simplex_2d();

PointCloud<Rat> line_cloud(const AsymGauge<Rat>& g, const std::vector<Rat>& coords);
PointCloud<Rat> grid_cloud_2d(const AsymGauge<Rat>& g, int width, int height);

// Random nonnegative integer matrix with zero diagonal, repaired by min-plus
// closure (the shortest-path oracle); redraws until the T0 axiom holds.
SquareMatrix<Rat> random_repaired_matrix(Rng& rng, int n, int entry_bound);

struct CorpusInstance {
  std::string name;
  Instance instance;
};

// The deterministic instance corpus: the fixed gauge/grid cloud library
// followed by random repaired matrices with sizes cycled from `sizes`,
// padded until `total` instances exist.
std::vector<CorpusInstance> generate_corpus(std::uint64_t seed,
                                            const std::vector<int>& sizes, int total);

// Free second component with small rational entries; first component is the
// sup-representation plus nonnegative slack, so the pair is ample by
// construction.
FunctionPair<Rat> random_ample_pair(const QSpace<Rat>& s, Rng& rng);

// Certified pool for property sweeps: minimized random ample pairs plus all
// embeddings.
std::vector<HullPoint<Rat>> hull_point_pool(const QSpace<Rat>& s, Rng& rng,
                                            int random_count);

}  // namespace dihull
