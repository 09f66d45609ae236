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

#include "dihull/search.hpp"

#include <string>

namespace dihull {

namespace {

// Axioms over raw integer entries, cheap enough to run inside the odometer.
bool valid_entries(const std::vector<int>& q, int n) {
  auto at = [&](int i, int j) { return q[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, k) > at(i, j) + at(j, k)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) == 0 && at(j, i) == 0) return false;
  return true;
}

}  // namespace

CounterexampleResult counterexample_search(int max_n, const std::vector<Rat>& grid,
                                           int value_bound) {
  if (max_n > 5) throw ValidationError("counterexample_search: max_n must be <= 5");
  if (grid.empty()) throw ValidationError("counterexample_search: empty lambda grid");
  std::uint64_t spaces = 0, candidates = 0;

  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off.emplace_back(i, j);

    std::vector<int> digits(off.size(), 0);
    bool carry_done = false;
    while (!carry_done) {
      std::vector<int> q(static_cast<std::size_t>(n) * n, 0);
      for (std::size_t c = 0; c < off.size(); ++c)
        q[static_cast<std::size_t>(off[c].first) * n + off[c].second] = digits[c];

      if (valid_entries(q, n)) {
        ++spaces;
        SquareMatrix<Rat> m(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            m.at(i, j) = Rat(q[static_cast<std::size_t>(i) * n + j]);
        QSpace<Rat> space = require_qspace(m);

        for (const auto& [x, y] : off) {
          for (int mid = 0; mid < n; ++mid) {
            for (const Rat& lam : grid) {
              ++candidates;
              ConvexTable<Rat> t{space, grid, {}};
              for (int d = 0; d < n; ++d)
                for (const Rat& l : grid) t.set(d, d, l, d);
              t.set(x, y, lam, mid);
              if (!check_takahashi(t, TakahashiMode::symmetrized).pass) continue;
              auto directed = check_takahashi(t, TakahashiMode::directed);
              if (directed.pass) continue;
              // Independent re-verification before emission.
              if (check_takahashi(t, TakahashiMode::symmetrized).pass &&
                  !check_takahashi(t, TakahashiMode::directed).pass) {
                return CounterexampleResult{space, t, *directed.witness, spaces,
                                            candidates};
              }
            }
          }
        }
      }

      // Odometer over the off-diagonal entries, last cell fastest.
      int pos = static_cast<int>(digits.size()) - 1;
      while (pos >= 0) {
        if (++digits[pos] <= value_bound) break;
        digits[pos] = 0;
        --pos;
      }
      carry_done = pos < 0;
    }
  }
  throw SearchExhausted("counterexample_search: exhausted n<=" + std::to_string(max_n) +
                        ", bound " + std::to_string(value_bound));
}

}  // namespace dihull
