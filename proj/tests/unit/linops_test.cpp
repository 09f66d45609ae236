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

#include <doctest.h>

#include <random>

#include "dihull/linops.hpp"

using namespace dihull;

namespace {

CloudSpace<Rat> u_line(int n) {
  PointCloud<Rat> pc{{1, {{Rat(1)}}}, {}};
  for (int i = 0; i < n; ++i) pc.points.push_back({Rat(i)});
  return CloudSpace<Rat>::make(std::move(pc));
}

CloudSpace<Rat> abs_line(const std::vector<int>& pts) {
  PointCloud<Rat> pc{{1, {{Rat(1)}, {Rat(-1)}}}, {}};
  for (int v : pts) pc.points.push_back({Rat(v)});
  return CloudSpace<Rat>::make(std::move(pc));
}

CloudSpace<Rat> grid2d(const AsymGauge<Rat>& g, int k) {
  PointCloud<Rat> pc{g, {}};
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) pc.points.push_back({Rat(a), Rat(b)});
  return CloudSpace<Rat>::make(std::move(pc));
}

AsymGauge<Rat> max_gauge() { return {2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}}; }
AsymGauge<Rat> simplex_gauge() {
  return {2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}};
}

}  // namespace

TEST_CASE("extended evaluation agrees with stored values at base points") {
  auto cs = u_line(3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    FunctionPair<Rat> p;
    p.f2.resize(3);
    for (auto& v : p.f2) v = Rat(static_cast<std::int64_t>(rng() % 9), 4);
    p.f1 = suprep_first(cs.space, p.f2);
    auto h = minimize(cs.space, p).point;
    ExtendedEval<Rat> ext(cs, h);
    for (int j = 0; j < 3; ++j) {
      CHECK(ext.ext1(cs.cloud.points[j]) == h.f1()[j]);
      CHECK(ext.ext2(cs.cloud.points[j]) == h.f2()[j]);
    }
    // midpoint convexity spot checks
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Vec<Rat> mid = vec_scale(Rat(1, 2),
                                 vec_add(cs.cloud.points[a], cs.cloud.points[b]));
        CHECK(Rat(2) * ext.ext1(mid) <= ext.ext1(cs.cloud.points[a]) +
                                            ext.ext1(cs.cloud.points[b]));
        CHECK(Rat(2) * ext.ext2(mid) <= ext.ext2(cs.cloud.points[a]) +
                                            ext.ext2(cs.cloud.points[b]));
      }
  }
}

TEST_CASE("scalar_mul halves an embedded point on the line") {
  auto cs = u_line(3);
  auto f = embed(cs.space, 2);
  CHECK(scalar_mul(cs, Rat(1, 2), f) == embed(cs.space, 1));
}

TEST_CASE("scalar_mul by one is the identity") {
  auto cs = u_line(3);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    FunctionPair<Rat> p;
    p.f2.resize(3);
    for (auto& v : p.f2) v = Rat(static_cast<std::int64_t>(rng() % 9), 2);
    p.f1 = suprep_first(cs.space, p.f2);
    auto h = minimize(cs.space, p).point;
    CHECK(scalar_mul(cs, Rat(1), h) == h);
  }
}

TEST_CASE("scalar_mul by zero lands on the embedded origin") {
  auto cs = u_line(3);
  CHECK(scalar_mul(cs, Rat(0), embed(cs.space, 2)) == embed(cs.space, 0));
}

TEST_CASE("scalar_mul by a negative scalar swaps components") {
  auto cs = abs_line({-1, 0, 1});
  CHECK(scalar_mul(cs, Rat(-1), embed(cs.space, 2)) == embed(cs.space, 0));
  CHECK(scalar_mul(cs, Rat(-1), embed(cs.space, 1)) == embed(cs.space, 1));
}

TEST_CASE("scalar_mul by zero can lose ampleness on a coarse asymmetric cloud") {
  auto cs = grid2d(simplex_gauge(), 2);
  CHECK_THROWS_AS(scalar_mul(cs, Rat(0), embed(cs.space, 4)), AmplenessLost);
}

TEST_CASE("oplus of embedded points adds their base points") {
  auto cs = u_line(4);
  CHECK(oplus(cs, embed(cs.space, 1), embed(cs.space, 2)) == embed(cs.space, 3));
}

TEST_CASE("oplus with the embedded origin is neutral") {
  auto cs = u_line(4);
  for (int i = 0; i < 4; ++i)
    CHECK(oplus(cs, embed(cs.space, i), embed(cs.space, 0)) == embed(cs.space, i));
}

TEST_CASE("oplus on the one-point cloud") {
  auto cs = u_line(1);
  auto f = embed(cs.space, 0);
  CHECK(oplus(cs, f, f) == f);
}

TEST_CASE("w_lift midpoint of an embedded pair") {
  auto cs = u_line(3);
  auto f = embed(cs.space, 0), g = embed(cs.space, 2);
  CHECK(w_lift(cs, f, g, Lambda<Rat>(Rat(1, 2))) == embed(cs.space, 1));
  CHECK(w_lift(cs, f, g, Lambda<Rat>(Rat(1))) == f);
  CHECK(w_lift(cs, f, g, Lambda<Rat>(Rat(0))) == g);
  for (int k : {0, 1, 2}) {
    auto h = embed(cs.space, k);
    CHECK(w_lift(cs, h, h, Lambda<Rat>(Rat(1, 4))) == h);
  }
}

TEST_CASE("lambda outside the unit interval is rejected") {
  CHECK_THROWS_AS(Lambda<Rat>(Rat(-1, 2)), ValidationError);
  CHECK_THROWS_AS(Lambda<Rat>(Rat(3, 2)), ValidationError);
}

TEST_CASE("intertwine on the line and on 2-d grids") {
  auto cs = u_line(3);
  CHECK(intertwine_check(cs, 0, 2, Lambda<Rat>(Rat(1, 2))));
  CHECK(intertwine_check(cs, 1, 2, Lambda<Rat>(Rat(0))));
  CHECK(intertwine_check(cs, 1, 2, Lambda<Rat>(Rat(1))));
  CHECK_THROWS_AS(intertwine_check(cs, 0, 1, Lambda<Rat>(Rat(1, 2))),
                  OffGridCombination);

  auto g2 = grid2d(max_gauge(), 2);
  auto diag0 = g2.index_of({Rat(0), Rat(0)});
  auto diag2 = g2.index_of({Rat(2), Rat(2)});
  REQUIRE(diag0);
  REQUIRE(diag2);
  CHECK(intertwine_check(g2, *diag0, *diag2, Lambda<Rat>(Rat(1, 2))));

  auto a2 = grid2d(simplex_gauge(), 2);
  CHECK(intertwine_check(a2, *a2.index_of({Rat(0), Rat(2)}),
                         *a2.index_of({Rat(2), Rat(0)}), Lambda<Rat>(Rat(1, 2))));
}

TEST_CASE("segment law on the golden line instance") {
  auto cs = u_line(3);
  auto f = embed(cs.space, 0), g = embed(cs.space, 2);
  std::vector<Lambda<Rat>> lams;
  for (auto v : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
    lams.emplace_back(v);
  auto seg = segment(cs, f, g, lams);
  CHECK(seg.alpha == Rat(2));
  CHECK(seg.beta == Rat(0));
  CHECK(seg.all_match);
  // q_E(h_1, h_{1/2}) = (1 - 1/2) * alpha
  CHECK(seg.table[4][2].actual == Rat(1));
  // reverse orientation collapses to beta = 0
  CHECK(seg.table[2][4].actual == Rat(0));
  for (std::size_t a = 0; a < lams.size(); ++a) CHECK(seg.table[a][a].actual == Rat(0));
  // endpoint identities
  for (std::size_t a = 0; a < lams.size(); ++a) {
    Rat lam = lams[a].value;
    CHECK(q_hull(cs.space, f, seg.points[a]) == (Rat(1) - lam) * seg.alpha);
    CHECK(q_hull(cs.space, seg.points[a], g) == lam * seg.alpha);
  }
}

TEST_CASE("translation by an embedded point is nonexpansive") {
  auto cs = u_line(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int h = 0; h < 2; ++h) {
        auto fa = embed(cs.space, a), fb = embed(cs.space, b);
        auto fh = embed(cs.space, h);
        auto ta = oplus(cs, fa, fh), tb = oplus(cs, fb, fh);
        CHECK(q_hull(cs.space, ta, tb) <= q_hull(cs.space, fa, fb));
      }
}

TEST_CASE("symmetric gauge collapses the two hull distances") {
  auto cs = abs_line({0, 1});
  auto f = embed(cs.space, 0), g = embed(cs.space, 1);
  CHECK(q_hull(cs.space, f, g) == Rat(1));
  CHECK(q_hull_conjugate(cs.space, f, g) == Rat(1));
}

TEST_CASE("negation reflects embedded points on a centered u-gauge cloud") {
  PointCloud<Rat> pc{{1, {{Rat(1)}}},
                     {{Rat(-2)}, {Rat(-1)}, {Rat(0)}, {Rat(1)}, {Rat(2)}}};
  auto cs = CloudSpace<Rat>::make(pc);
  CHECK(scalar_mul(cs, Rat(-1), embed(cs.space, 4)) == embed(cs.space, 0));
  CHECK(scalar_mul(cs, Rat(-1), embed(cs.space, 2)) == embed(cs.space, 2));
  CHECK(scalar_mul(cs, Rat(-1, 2), embed(cs.space, 4)) == embed(cs.space, 1));
}
