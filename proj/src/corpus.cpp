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

#include "dihull/corpus.hpp"

namespace dihull {

AsymGauge<Rat> gauge_u_line() { return {1, {{Rat(1)}}}; }
AsymGauge<Rat> gauge_abs_line() { return {1, {{Rat(1)}, {Rat(-1)}}}; }
AsymGauge<Rat> gauge_max_2d() { return {2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}}; }
AsymGauge<Rat> gauge_simplex_2d() {
  return {2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}};
}

PointCloud<Rat> line_cloud(const AsymGauge<Rat>& g, const std::vector<Rat>& coords) {
  PointCloud<Rat> pc{g, {}};
  for (const auto& c : coords) pc.points.push_back({c});
  return pc;
}

PointCloud<Rat> grid_cloud_2d(const AsymGauge<Rat>& g, int width, int height) {
  PointCloud<Rat> pc{g, {}};
  for (int a = 0; a < width; ++a)
    for (int b = 0; b < height; ++b) pc.points.push_back({Rat(a), Rat(b)});
  return pc;
}

SquareMatrix<Rat> random_repaired_matrix(Rng& rng, int n, int entry_bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SquareMatrix<Rat> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          m.at(i, j) = Rat(0);
          continue;
        }
        // zero entries stay rare: after min-plus closure, zero edges spread
        // along directed paths and a dense zero digraph kills the T0 axiom
        bool zero = draw(rng, 2 * static_cast<std::uint64_t>(n)) == 0;
        m.at(i, j) =
            zero ? Rat(0)
                 : Rat(1 + static_cast<std::int64_t>(
                           draw(rng, static_cast<std::uint64_t>(entry_bound))));
      }
    // min-plus closure
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m.at(i, k) + m.at(k, j) < m.at(i, j))
            m.at(i, j) = m.at(i, k) + m.at(k, j);
    auto rep = validate_qspace(m);
    if (rep.ok()) return m;
  }
  throw Error("random_repaired_matrix: could not draw a T0 space");
}

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed,
                                            const std::vector<int>& sizes, int total) {
  std::vector<CorpusInstance> out;
  auto add_cloud = [&](const std::string& name, PointCloud<Rat> pc) {
    if (static_cast<int>(out.size()) < total)
      out.push_back({name, Instance{std::move(pc)}});
  };

  auto iota_line = [](int n) {
    std::vector<Rat> v;
    for (int i = 0; i < n; ++i) v.push_back(Rat(i));
    return v;
  };
  std::vector<Rat> halves;
  for (int i = 0; i <= 6; ++i) halves.push_back(Rat(i, 2));

  add_cloud("u-line-3", line_cloud(gauge_u_line(), iota_line(3)));
  add_cloud("u-line-5", line_cloud(gauge_u_line(), iota_line(5)));
  add_cloud("u-line-9", line_cloud(gauge_u_line(), iota_line(9)));
  add_cloud("u-line-halves", line_cloud(gauge_u_line(), halves));
  add_cloud("u-line-irregular",
            line_cloud(gauge_u_line(), {Rat(0), Rat(1), Rat(3), Rat(4), Rat(7)}));
  add_cloud("abs-line-4", line_cloud(gauge_abs_line(), iota_line(4)));
  add_cloud("abs-line-6", line_cloud(gauge_abs_line(), iota_line(6)));
  add_cloud("abs-line-centered",
            line_cloud(gauge_abs_line(), {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)}));
  add_cloud("max2d-3x3", grid_cloud_2d(gauge_max_2d(), 3, 3));
  add_cloud("max2d-4x3", grid_cloud_2d(gauge_max_2d(), 4, 3));
  add_cloud("simplex2d-3x3", grid_cloud_2d(gauge_simplex_2d(), 3, 3));
  add_cloud("simplex2d-4x3", grid_cloud_2d(gauge_simplex_2d(), 4, 3));

  Rng rng(seed);
  std::size_t size_at = 0;
  while (static_cast<int>(out.size()) < total) {
    int n = sizes.empty() ? 4 : sizes[size_at % sizes.size()];
    ++size_at;
    int bound = 2 + static_cast<int>(draw(rng, 4));
    auto m = random_repaired_matrix(rng, n, bound);
    out.push_back({"matrix-n" + std::to_string(n) + "-" + std::to_string(out.size()),
                   Instance{std::move(m)}});
  }
  return out;
}

FunctionPair<Rat> random_ample_pair(const QSpace<Rat>& s, Rng& rng) {
  const int n = s.size();
  FunctionPair<Rat> p;
  p.f2.resize(n);
  for (int i = 0; i < n; ++i)
    p.f2[i] = Rat(static_cast<std::int64_t>(draw(rng, 13)), 4);
  p.f1 = suprep_first(s, p.f2);
  for (int j = 0; j < n; ++j)
    p.f1[j] += Rat(static_cast<std::int64_t>(draw(rng, 5)), 2);
  return p;
}

std::vector<HullPoint<Rat>> hull_point_pool(const QSpace<Rat>& s, Rng& rng,
                                            int random_count) {
  std::vector<HullPoint<Rat>> pool;
  pool.reserve(static_cast<std::size_t>(random_count) + s.size());
  for (int t = 0; t < random_count; ++t)
    pool.push_back(minimize(s, random_ample_pair(s, rng)).point);
  for (int i = 0; i < s.size(); ++i) pool.push_back(embed(s, i));
  return pool;
}

}  // namespace dihull
