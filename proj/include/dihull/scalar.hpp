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

#include <cmath>
#include <string>

#include "dihull/rational.hpp"

namespace dihull {

// Core algorithms are generic over the scalar: Rat in exact mode, double in
// float mode. Comparisons take a slack eps that is zero for Rat, so the same
// code path is exact where exactness is claimed.

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat abs(const Rat& a) { return dihull::abs(a); }
  static Rat from_rat(const Rat& r) { return r; }
  static double to_double(const Rat& r) { return r.to_double(); }
  static std::string str(const Rat& r) { return r.str(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double abs(double a) { return std::fabs(a); }
  static double from_rat(const Rat& r) { return r.to_double(); }
  static double to_double(double r) { return r; }
  static std::string str(double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
  }
};

template <typename S>
bool approx_eq(const S& a, const S& b, const S& eps) {
  return scalar_traits<S>::abs(a - b) <= eps;
}

// a <= b up to slack.
template <typename S>
bool leq(const S& a, const S& b, const S& eps) {
  return a <= b + eps;
}

template <typename S>
S pos_part(const S& a) {
  return a < scalar_traits<S>::zero() ? scalar_traits<S>::zero() : a;
}

}  // namespace dihull
