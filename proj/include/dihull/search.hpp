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
#include <vector>

#include "dihull/convexity.hpp"
#include "dihull/rational.hpp"

namespace dihull {

struct CounterexampleResult {
  QSpace<Rat> space;
  // Diagonal cells plus the single off-diagonal cell that separates the two
  // modes; passes the symmetrized check and fails a directed inequality.
  ConvexTable<Rat> table;
  TakahashiWitness<Rat> witness;
  std::uint64_t spaces_scanned = 0;
  std::uint64_t candidates_scanned = 0;
};

// Deterministic lexicographic enumeration of small integer-entry
// T0-quasi-metric spaces and candidate convexity cells, looking for a table
// that is Takahashi for the symmetrized metric but not for the quasi-metric.
//
// A table total at an interior lambda cannot pass the symmetrized mode on a
// nontrivial finite space (the closest distinct pair cannot have a strictly
// nearer midpoint), so candidates consist of the forced diagonal cells plus
// one off-diagonal cell. Throws SearchExhausted when the bounds run out.
CounterexampleResult counterexample_search(int max_n, const std::vector<Rat>& grid,
                                           int value_bound);

}  // namespace dihull
