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

#include "dihull/linops.hpp"

using namespace dihull;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("float pipeline reproduces the worked minimize example") {
  std::vector<std::vector<double>> rows{{0, 0, 0}, {1, 0, 0}, {2, 1, 0}};
  auto s = require_qspace(SquareMatrix<double>(rows), kTol);
  FunctionPair<double> p{{2, 1, 1}, {1, 1, 2}};
  auto res = minimize(s, p, kTol);
  CHECK(pair_approx_eq(res.point.pair(), embed(s, 0, kTol).pair(), kTol));
}

TEST_CASE("float validation uses the tolerance") {
  SquareMatrix<double> m(2);
  m.at(0, 0) = 1e-12;  // dirty diagonal within tolerance
  m.at(0, 1) = 0.5;
  m.at(1, 0) = 0.25;
  m.at(1, 1) = 0.0;
  CHECK(validate_qspace(m, kTol).ok());
  m.at(0, 0) = 1e-6;  // outside tolerance
  CHECK_FALSE(validate_qspace(m, kTol).ok());
}

TEST_CASE("float q_hull matches exact values on the line cloud") {
  PointCloud<double> pc{{1, {{1.0}}}, {{0.0}, {1.0}, {2.0}}};
  auto cs = CloudSpace<double>::make(pc, kTol);
  CHECK(q_hull(cs.space, embed(cs.space, 0, kTol), embed(cs.space, 2, kTol), kTol) ==
        doctest::Approx(2.0));
  auto w = w_lift(cs, embed(cs.space, 0, kTol), embed(cs.space, 2, kTol),
                  Lambda<double>(0.5), kTol);
  CHECK(pair_approx_eq(w.pair(), embed(cs.space, 1, kTol).pair(), kTol));
}

TEST_CASE("float mode tolerates rounding noise in pairs") {
  std::vector<std::vector<double>> rows{{0, 0, 0}, {1, 0, 0}, {2, 1, 0}};
  auto s = require_qspace(SquareMatrix<double>(rows), kTol);
  FunctionPair<double> p{{0, 0, 0}, {0 + 3e-10, 1 - 3e-10, 2 + 3e-10}};
  CHECK(is_minimal(s, p, kTol));
  CHECK_NOTHROW(HullPoint<double>(s, p, kTol));
}
