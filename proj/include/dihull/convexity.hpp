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

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "dihull/linops.hpp"

namespace dihull {

// A convexity structure given extensionally: cells (i, j, lambda) -> index.
// Tables may be partial; a finite space cannot carry a total structure at
// interior lambda (the closest distinct pair would need a strictly nearer
// midpoint), so verifiers and the search work on the declared cells.
template <typename S>
struct ConvexTable {
  QSpace<S> space;
  std::vector<S> grid;
  std::map<std::tuple<int, int, S>, int> cells;

  void set(int i, int j, const S& lam, int m) {
    const int n = space.size();
    if (i < 0 || i >= n || j < 0 || j >= n || m < 0 || m >= n)
      throw IndexOutOfRange("ConvexTable: cell index out of range");
    if (std::find(grid.begin(), grid.end(), lam) == grid.end())
      throw GridMismatch("ConvexTable: lambda not in declared grid");
    cells[{i, j, lam}] = m;
  }
};

// Cells of the standard affine map that land on base points.
template <typename S>
ConvexTable<S> affine_table(const CloudSpace<S>& cs, const std::vector<S>& grid,
                            const S& eps = scalar_traits<S>::zero()) {
  ConvexTable<S> t{cs.space, grid, {}};
  const int n = cs.size();
  for (const auto& lam : grid) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<S> combo = vec_add(vec_scale(lam, cs.cloud.points[i]),
                               vec_scale(S(1) - lam, cs.cloud.points[j]));
        if (auto m = cs.index_of(combo, eps)) t.set(i, j, lam, *m);
      }
  }
  return t;
}

enum class TakahashiMode { directed, symmetrized };

template <typename S>
struct TakahashiWitness {
  int which;  // 1 or 2: which directed inequality failed
  int z, i, j;
  S lambda;
};

template <typename S>
struct TakahashiVerdict {
  bool pass = true;
  std::optional<TakahashiWitness<S>> witness;
};

// Directed mode checks both inequalities of the convex-structure definition
// against q; symmetrized mode checks the single inequality against q^s.
template <typename S>
TakahashiVerdict<S> check_takahashi(const ConvexTable<S>& t, TakahashiMode mode,
                                    const S& eps = scalar_traits<S>::zero()) {
  const int n = t.space.size();
  QSpace<S> sym = symmetrize(t.space, eps);
  const QSpace<S>& A = mode == TakahashiMode::directed ? t.space : sym;
  for (const auto& [key, m] : t.cells) {
    auto [i, j, lam] = key;
    const S mu = S(1) - lam;
    for (int z = 0; z < n; ++z) {
      if (!leq(A.q(z, m), lam * A.q(z, i) + mu * A.q(z, j), eps))
        return {false, TakahashiWitness<S>{1, z, i, j, lam}};
      if (mode == TakahashiMode::directed &&
          !leq(A.q(m, z), lam * A.q(i, z) + mu * A.q(j, z), eps))
        return {false, TakahashiWitness<S>{2, z, i, j, lam}};
    }
  }
  return {};
}

template <typename S>
struct WConvexSetVerdict {
  bool pass = true;
  // failing cell: W(i,j,lambda) = m with i,j in C but m outside.
  std::optional<std::tuple<int, int, S, int>> witness;
};

template <typename S>
WConvexSetVerdict<S> check_wconvex_set(const ConvexTable<S>& t,
                                       const std::vector<int>& c) {
  std::vector<char> in(t.space.size(), 0);
  for (int x : c) {
    if (x < 0 || x >= t.space.size())
      throw IndexOutOfRange("check_wconvex_set: member out of range");
    in[x] = 1;
  }
  for (const auto& [key, m] : t.cells) {
    auto [i, j, lam] = key;
    if (in[i] && in[j] && !in[m]) return {false, std::make_tuple(i, j, lam, m)};
  }
  return {};
}

template <typename S>
struct WConvexPairVerdict {
  bool pass = true;
  // (i, j, lambda, component) of the first failed Jensen inequality.
  std::optional<std::tuple<int, int, S, int>> witness;
};

// Jensen inequalities for both components of a hull point along the affine
// map; off-base combinations are evaluated through the extension, which
// keeps the check exact for rational data.
template <typename S>
WConvexPairVerdict<S> check_wconvex_pair(
    const CloudSpace<S>& cs, const HullPoint<S>& p,
    const std::vector<std::tuple<int, int, S>>& samples,
    const S& eps = scalar_traits<S>::zero()) {
  ExtendedEval<S> ext(cs, p);
  for (const auto& [i, j, lam] : samples) {
    if (i < 0 || i >= cs.size() || j < 0 || j >= cs.size())
      throw IndexOutOfRange("check_wconvex_pair: sample index out of range");
    const S mu = S(1) - lam;
    Vec<S> w = vec_add(vec_scale(lam, cs.cloud.points[i]),
                       vec_scale(mu, cs.cloud.points[j]));
    if (!leq(ext.ext1(w), lam * p.f1()[i] + mu * p.f1()[j], eps))
      return {false, std::make_tuple(i, j, lam, 1)};
    if (!leq(ext.ext2(w), lam * p.f2()[i] + mu * p.f2()[j], eps))
      return {false, std::make_tuple(i, j, lam, 2)};
  }
  return {};
}

template <typename S>
struct CompetitorVerdict {
  // Whether h satisfies both uniqueness inequalities against every probe.
  bool satisfies = true;
  std::optional<int> failing_probe;
  bool equals_wlift = false;
  // An empty probe set proves nothing.
  bool conclusive = false;

  bool refutation() const { return conclusive && satisfies && !equals_wlift; }
};

// Tests whether a candidate h competes with W(f,g,lambda) for the uniqueness
// inequalities over an explicit probe set. A satisfying h different from the
// lifted point is a uniqueness refutation certificate for those probes.
template <typename S>
CompetitorVerdict<S> uniqueness_competitor(const CloudSpace<S>& cs,
                                           const HullPoint<S>& f,
                                           const HullPoint<S>& g,
                                           const Lambda<S>& lam,
                                           const HullPoint<S>& h,
                                           const std::vector<HullPoint<S>>& probes,
                                           const S& eps = scalar_traits<S>::zero()) {
  CompetitorVerdict<S> v;
  const S mu = S(1) - lam.value;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto& u = probes[k];
    bool ok =
        leq(q_hull(cs.space, u, h, eps),
            lam.value * q_hull(cs.space, u, f, eps) + mu * q_hull(cs.space, u, g, eps),
            eps) &&
        leq(q_hull(cs.space, h, u, eps),
            lam.value * q_hull(cs.space, f, u, eps) + mu * q_hull(cs.space, g, u, eps),
            eps);
    if (!ok) {
      v.satisfies = false;
      v.failing_probe = static_cast<int>(k);
      break;
    }
  }
  v.conclusive = !probes.empty();
  HullPoint<S> w = w_lift(cs, f, g, lam, eps);
  v.equals_wlift = pair_approx_eq(w.pair(), h.pair(), eps);
  return v;
}

}  // namespace dihull
