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

#include "dihull/chebyshev.hpp"
#include "dihull/linops.hpp"

using namespace dihull;

namespace {

QSpace<Rat> line_space() {
  std::vector<std::vector<Rat>> rows{{Rat(0), Rat(0), Rat(0)},
                                     {Rat(1), Rat(0), Rat(0)},
                                     {Rat(2), Rat(1), Rat(0)}};
  return require_qspace(SquareMatrix<Rat>(rows));
}

HullSubset<Rat> full_line_subset() {
  auto s = line_space();
  return HullSubset<Rat>(s, {embed(s, 0), embed(s, 1), embed(s, 2)});
}

}  // namespace

TEST_CASE("radii on the golden subset") {
  auto a = full_line_subset();
  auto r0 = radii(a, a.elements[0]);
  CHECK(r0.r_q == Rat(2));
  CHECK(r0.r_qt == Rat(0));
  CHECK(r0.r == Rat(2));
  auto r1 = radii(a, a.elements[1]);
  CHECK(r1.r_q == Rat(1));
  CHECK(r1.r_qt == Rat(1));
  CHECK(r1.r == Rat(1));
}

TEST_CASE("radii on a singleton") {
  auto s = line_space();
  HullSubset<Rat> a(s, {embed(s, 2)});
  auto r = radii(a, a.elements[0]);
  CHECK(r.r == Rat(0));
}

TEST_CASE("center and diameter golden values") {
  auto a = full_line_subset();
  auto info = center_and_diameter(a);
  CHECK(info.r == Rat(1));
  CHECK(info.center == std::vector<int>{1});
  CHECK(info.diam == Rat(2));

  auto s = line_space();
  HullSubset<Rat> two(s, {embed(s, 0), embed(s, 2)});
  auto info2 = center_and_diameter(two);
  CHECK(info2.r == Rat(2));
  CHECK(info2.center == std::vector<int>{0, 1});
  CHECK(info2.diam == Rat(2));
}

TEST_CASE("empty subsets are rejected") {
  auto s = line_space();
  CHECK_THROWS_AS(HullSubset<Rat>(s, {}), EmptySetError);
}

TEST_CASE("normal structure verdicts") {
  auto a = full_line_subset();
  auto v = normal_structure_check(a);
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.r == Rat(1));
  CHECK(v.diam == Rat(2));

  auto s = line_space();
  auto v1 = normal_structure_check(HullSubset<Rat>(s, {embed(s, 1)}));
  CHECK_FALSE(v1.applicable);

  auto v2 = normal_structure_check(HullSubset<Rat>(s, {embed(s, 0), embed(s, 2)}));
  CHECK(v2.applicable);
  CHECK_FALSE(v2.holds);
  CHECK(v2.r == v2.diam);
}

TEST_CASE("double closure on the directed line") {
  auto s = line_space();
  std::vector<HullPoint<Rat>> universe{embed(s, 0), embed(s, 1), embed(s, 2)};
  // A = {f_1}: f_0 reaches A one way round ( q_E(f_0 -> ...) ) but not both.
  HullSubset<Rat> a(s, {embed(s, 1)}, universe);
  auto c = double_closure(a);
  CHECK(c.count() == 1);
  CHECK(c.elements[0] == embed(s, 1));
  CHECK(is_doubly_closed(a));

  HullSubset<Rat> all(s, universe, universe);
  auto call = double_closure(all);
  CHECK(call.count() == 3);

  CHECK_THROWS_AS(double_closure(HullSubset<Rat>(s, {embed(s, 1)})), ValidationError);
}

TEST_CASE("double closure is extensive and idempotent") {
  auto s = line_space();
  std::vector<HullPoint<Rat>> universe{embed(s, 0), embed(s, 1), embed(s, 2)};
  for (int i = 0; i < 3; ++i) {
    HullSubset<Rat> a(s, {embed(s, i)}, universe);
    auto c = double_closure(a);
    for (const auto& e : a.elements)
      CHECK(std::find(c.elements.begin(), c.elements.end(), e) != c.elements.end());
    auto cc = double_closure(c);
    CHECK(cc.count() == c.count());
  }
}

TEST_CASE("descent reaches the center singleton") {
  auto a = full_line_subset();
  auto tr = cheb_descent(a);
  REQUIRE(tr.chain.size() == 2);
  CHECK(tr.chain[0].members == std::vector<int>{0, 1, 2});
  CHECK(tr.chain[0].r == Rat(1));
  CHECK(tr.chain[0].diam == Rat(2));
  CHECK(tr.chain[1].members == std::vector<int>{1});
  CHECK(tr.chain[1].diam == Rat(0));
  CHECK(tr.reached_zero_diam);
  CHECK_FALSE(tr.stalled);
}

TEST_CASE("descent on a singleton stops immediately") {
  auto s = line_space();
  auto tr = cheb_descent(HullSubset<Rat>(s, {embed(s, 0)}));
  CHECK(tr.chain.size() == 1);
  CHECK(tr.reached_zero_diam);
}

TEST_CASE("descent stalls on the two-point directed set") {
  auto s = line_space();
  auto tr = cheb_descent(HullSubset<Rat>(s, {embed(s, 0), embed(s, 2)}));
  CHECK(tr.chain.size() == 1);
  CHECK(tr.stalled);
  CHECK(tr.chain[0].r == Rat(2));
  CHECK(tr.chain[0].diam == Rat(2));
}

TEST_CASE("property (H) on finite descending chains") {
  auto s = line_space();
  std::vector<HullSubset<Rat>> chain{full_line_subset(),
                                     HullSubset<Rat>(s, {embed(s, 0), embed(s, 1)}),
                                     HullSubset<Rat>(s, {embed(s, 1)})};
  CHECK(property_h_finite(chain));
  std::vector<HullSubset<Rat>> not_nested{HullSubset<Rat>(s, {embed(s, 0)}),
                                          HullSubset<Rat>(s, {embed(s, 1)})};
  CHECK_THROWS_AS(property_h_finite(not_nested), ValidationError);
}

TEST_CASE("nonexpansive verdicts on the golden subset") {
  auto a = full_line_subset();
  CHECK(check_nonexpansive(a, SelfMapTable{{0, 1, 2}}).pass);
  CHECK(check_nonexpansive(a, SelfMapTable{{1, 1, 1}}).pass);
  // swap f0 <-> f2 fixing f1: q_E(T f2, T f0) = 2 > 0 = q_E(f2, f0)
  auto v = check_nonexpansive(a, SelfMapTable{{2, 1, 0}});
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK_THROWS_AS(check_nonexpansive(a, SelfMapTable{{0, 1}}), DimensionMismatch);
}

TEST_CASE("fixed points and common fixed points") {
  auto a = full_line_subset();
  CHECK(fixed_points(SelfMapTable{{0, 1, 2}}) == std::vector<int>{0, 1, 2});
  CHECK(fixed_points(SelfMapTable{{1, 1, 1}}) == std::vector<int>{1});
  auto r = common_fixed(a, {SelfMapTable{{0, 1, 2}}, SelfMapTable{{1, 1, 1}}});
  CHECK(r.common == std::vector<int>{1});
  CHECK_FALSE(r.alarm);
}

TEST_CASE("non-commuting families are rejected") {
  auto a = full_line_subset();
  // both constant maps are nonexpansive but do not commute
  CHECK_THROWS_AS(common_fixed(a, {SelfMapTable{{1, 1, 1}}, SelfMapTable{{0, 0, 0}}}),
                  CommutationFailure);
}

TEST_CASE("non-nonexpansive maps are rejected by common_fixed") {
  auto a = full_line_subset();
  CHECK_THROWS_AS(common_fixed(a, {SelfMapTable{{2, 1, 0}}}), ValidationError);
}

TEST_CASE("center invariance holds for surjective nonexpansive maps") {
  auto a = full_line_subset();
  CHECK(center_invariance_check(a, SelfMapTable{{0, 1, 2}}));
  // constant map onto the center also preserves it
  CHECK(center_invariance_check(a, SelfMapTable{{1, 1, 1}}));
  // a nonexpansive map squashing onto a non-center point shows why the
  // fixed-point argument needs minimal invariant sets
  REQUIRE(check_nonexpansive(a, SelfMapTable{{0, 0, 0}}).pass);
  CHECK_FALSE(center_invariance_check(a, SelfMapTable{{0, 0, 0}}));
}

TEST_CASE("radius of a lifted combination is convexly bounded") {
  // r_{W(f,g,l)}(A) <= l r_f(A) + (1-l) r_g(A) on embedded aligned data
  PointCloud<Rat> pc{{1, {{Rat(1)}}}, {{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}, {Rat(4)}}};
  auto cs = CloudSpace<Rat>::make(pc);
  HullSubset<Rat> a(cs.space, {embed(cs.space, 0), embed(cs.space, 2), embed(cs.space, 4)});
  for (int i : {0, 2, 4})
    for (int j : {0, 2, 4}) {
      auto f = embed(cs.space, i), g = embed(cs.space, j);
      Rat lam(1, 2);
      if ((i + j) % 2 != 0) continue;
      auto w = w_lift(cs, f, g, Lambda<Rat>(lam));
      Rat lhs = radii(a, w).r;
      Rat rhs = lam * radii(a, f).r + (Rat(1) - lam) * radii(a, g).r;
      CHECK(lhs <= rhs);
    }
}

TEST_CASE("one-sided zero distance excludes a point from the double closure") {
  auto s = line_space();
  std::vector<HullPoint<Rat>> universe{embed(s, 0), embed(s, 1), embed(s, 2)};
  HullSubset<Rat> a(s, {embed(s, 1)}, universe);
  // u = f_2 reaches A at distance zero one way but not the other
  CHECK(q_hull(s, embed(s, 2), embed(s, 1)) == Rat(0));
  CHECK(q_hull(s, embed(s, 1), embed(s, 2)) == Rat(1));
  auto c = double_closure(a);
  for (const auto& e : c.elements) CHECK_FALSE(e == embed(s, 2));
}

TEST_CASE("fixed-point-free swap on a symmetric pair raises no alarm") {
  // the two-point symmetric set lacks normal structure, so its descent
  // stalls and the common fixed point theorem does not apply
  PointCloud<Rat> pc{{1, {{Rat(1)}, {Rat(-1)}}}, {{Rat(0)}, {Rat(1)}}};
  auto s = induce_qspace(pc);
  HullSubset<Rat> a(s, {embed(s, 0), embed(s, 1)});
  SelfMapTable swap{{1, 0}};
  REQUIRE(check_nonexpansive(a, swap).pass);
  auto r = common_fixed(a, {swap});
  CHECK(r.common.empty());
  CHECK_FALSE(r.alarm);
  CHECK(cheb_descent(a).stalled);
}
