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

#include <cstdint>
#include <random>

#include "dihull/rational.hpp"

using dihull::Rat;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(-Rat(3, 5) == Rat(-3, 5));
  CHECK(dihull::abs(Rat(-3, 5)) == Rat(3, 5));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(7).is_integer());
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(0));
}

TEST_CASE("rational parse and format round trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-5).str() == "-5");
  CHECK_THROWS_AS(Rat::parse("1/0"), dihull::ParseError);
  CHECK_THROWS_AS(Rat::parse(""), dihull::ParseError);
  CHECK_THROWS_AS(Rat::parse("a/b"), dihull::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), dihull::ParseError);
  CHECK_THROWS_AS(Rat(1, 0), dihull::ParseError);
}

TEST_CASE("rational overflow is detected") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, dihull::OverflowError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), dihull::OverflowError);
}

TEST_CASE("field axioms on random small rationals") {
  std::mt19937_64 rng(7);
  auto rnd = [&] {
    return Rat(static_cast<std::int64_t>(rng() % 41) - 20,
               static_cast<std::int64_t>(rng() % 12) + 1);
  };
  for (int t = 0; t < 500; ++t) {
    Rat a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a * c) / c == a);
  }
}
