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

#include "dihull/qspace.hpp"

using namespace dihull;

namespace {

SquareMatrix<Rat> mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SquareMatrix<Rat>(r);
}

AsymGauge<Rat> u_gauge() { return {1, {{Rat(1)}}}; }
AsymGauge<Rat> abs_gauge() { return {1, {{Rat(1)}, {Rat(-1)}}}; }

}  // namespace

TEST_CASE("validate_qspace accepts the standard line instance") {
  auto rep = validate_qspace(mat({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}));
  CHECK(rep.ok());
  REQUIRE(rep.space.has_value());
  CHECK(rep.space->q(2, 0) == Rat(2));
}

TEST_CASE("validate_qspace reports T0 violations") {
  auto rep = validate_qspace(mat({{0, 0}, {0, 0}}));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == QSpaceViolation::Kind::T0Violation);
  CHECK(rep.violations[0].i == 0);
  CHECK(rep.violations[0].j == 1);
}

TEST_CASE("validate_qspace reports triangle violations with witnesses") {
  // q(0,2)=7 > q(0,1)+q(1,2)=6; every other triangle holds.
  auto rep = validate_qspace(mat({{0, 5, 7}, {1, 0, 1}, {1, 1, 0}}));
  REQUIRE(rep.violations.size() == 1);
  const auto& v = rep.violations[0];
  CHECK(v.kind == QSpaceViolation::Kind::TriangleViolation);
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  CHECK(v.k == 2);
}

TEST_CASE("validate_qspace reports negative entries and bad diagonals") {
  SquareMatrix<Rat> m(2);
  m.at(0, 0) = Rat(0);
  m.at(0, 1) = Rat(-1);
  m.at(1, 0) = Rat(1);
  m.at(1, 1) = Rat(2);
  auto rep = validate_qspace(m);
  bool neg = false, diag = false;
  for (const auto& v : rep.violations) {
    neg = neg || v.kind == QSpaceViolation::Kind::NegativeEntry;
    diag = diag || v.kind == QSpaceViolation::Kind::NonzeroDiagonal;
  }
  CHECK(neg);
  CHECK(diag);
}

TEST_CASE("gauge_eval on the line") {
  CHECK(gauge_eval(u_gauge(), {Rat(3)}) == Rat(3));
  CHECK(gauge_eval(u_gauge(), {Rat(-2)}) == Rat(0));
  CHECK(gauge_eval(abs_gauge(), {Rat(-2)}) == Rat(2));
  CHECK_THROWS_AS(gauge_eval(u_gauge(), {Rat(1), Rat(2)}), DimensionMismatch);
}

TEST_CASE("gauge positive homogeneity is exact") {
  AsymGauge<Rat> g{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}};
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    return Rat(static_cast<std::int64_t>(rng() % 21) - 10,
               static_cast<std::int64_t>(rng() % 6) + 1);
  };
  for (int t = 0; t < 200; ++t) {
    Vec<Rat> x{rnd(), rnd()};
    Rat s(static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 4) + 1);
    CHECK(gauge_eval(g, vec_scale(s, x)) == s * gauge_eval(g, x));
    Vec<Rat> y{rnd(), rnd()};
    CHECK(gauge_eval(g, vec_add(x, y)) <= gauge_eval(g, x) + gauge_eval(g, y));
  }
}

TEST_CASE("gauge separation is a rank condition") {
  CHECK(gauge_separates(u_gauge()));
  CHECK(gauge_separates(AsymGauge<Rat>{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}}));
  CHECK(gauge_separates(
      AsymGauge<Rat>{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}}));
  CHECK_FALSE(gauge_separates(AsymGauge<Rat>{2, {{Rat(1), Rat(0)}}}));
  CHECK_FALSE(gauge_separates(
      AsymGauge<Rat>{2, {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}}));
}

TEST_CASE("induce_qspace on the u-gauge line") {
  PointCloud<Rat> pc{u_gauge(), {{Rat(0)}, {Rat(1)}, {Rat(2)}}};
  auto qs = induce_qspace(pc);
  CHECK(qs.matrix() == mat({{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}));
}

TEST_CASE("induce_qspace symmetric case and degenerate inputs") {
  PointCloud<Rat> pc{abs_gauge(), {{Rat(0)}, {Rat(1)}}};
  CHECK(induce_qspace(pc).matrix() == mat({{0, 1}, {1, 0}}));
  PointCloud<Rat> dup{u_gauge(), {{Rat(0)}, {Rat(0)}}};
  CHECK_THROWS_WITH_AS(induce_qspace(dup), "DuplicatePoint(0,1)", ValidationError);
}

TEST_CASE("induce_qspace flags indiscernible distinct points") {
  // one functional in 2-d: points differing along its kernel collapse
  PointCloud<Rat> pc{{2, {{Rat(1), Rat(0)}}},
                     {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}};
  CHECK_THROWS_AS(induce_qspace(pc), ValidationError);
}

TEST_CASE("conjugate and symmetrize") {
  auto s = require_qspace(mat({{0, 0}, {1, 0}}));
  CHECK(conjugate(s).matrix() == mat({{0, 1}, {0, 0}}));
  CHECK(symmetrize(s).matrix() == mat({{0, 1}, {1, 0}}));
  auto sym = require_qspace(mat({{0, 2}, {2, 0}}));
  CHECK(symmetrize(sym) == sym);
  // conjugate is an involution; symmetrize is idempotent
  CHECK(conjugate(conjugate(s)) == s);
  CHECK(symmetrize(symmetrize(s)) == symmetrize(s));
}

TEST_CASE("symmetrize yields a metric on random repaired spaces") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    int n = 3 + static_cast<int>(rng() % 4);
    SquareMatrix<Rat> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = i == j ? Rat(0) : Rat(1 + static_cast<std::int64_t>(rng() % 5));
    // min-plus closure repairs the triangle inequality
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (m.at(i, k) + m.at(k, j) < m.at(i, j)) m.at(i, j) = m.at(i, k) + m.at(k, j);
    auto rep = validate_qspace(m);
    REQUIRE(rep.ok());
    auto sm = symmetrize(*rep.space);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(sm.q(i, j) == sm.q(j, i));
  }
}

TEST_CASE("induced quasi-metric is translation invariant") {
  AsymGauge<Rat> g{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}};
  PointCloud<Rat> pc{g, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}}};
  PointCloud<Rat> shifted = pc;
  Vec<Rat> v{Rat(-3), Rat(7)};
  for (auto& p : shifted.points) p = vec_add(p, v);
  CHECK(induce_qspace(pc) == induce_qspace(shifted));
}
