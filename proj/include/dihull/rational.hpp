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
#include <numeric>
#include <stdexcept>
#include <string>

#include "dihull/errors.hpp"

namespace dihull {

// Exact rational on a 64-bit numerator/denominator, always reduced and with
// a positive denominator. Intermediate products go through 128-bit integers;
// any result that does not fit back into 64 bits throws OverflowError.
//
// Instance data in this project is made of small integers and small
// denominators (grid coordinates, halves/quarters of lambda grids), so the
// range is ample; the check turns a silent wrap into a loud failure.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(runtime/explicit)
  Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    normalize_(nn, dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make_(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                 i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make_(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                 i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make_(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw OverflowError("rational division by zero");
    return make_(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "p" and "p/q" with optional leading '-' on p; q must be positive.
  static Rat parse(const std::string& text);

 private:
  using i128 = __int128;

  static Rat make_(i128 n, i128 d) {
    Rat r;
    r.normalize_(n, d);
    return r;
  }

  void normalize_(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128_(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw OverflowError("rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  static i128 gcd128_(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

inline Rat Rat::parse(const std::string& text) {
  auto bad = [&]() -> ParseError {
    return ParseError("malformed rational '" + text + "'");
  };
  auto slash = text.find('/');
  std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto to_i64 = [&](const std::string& s, bool allow_sign) -> std::int64_t {
    if (s.empty()) throw bad();
    std::size_t k = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) throw bad();
    for (std::size_t i = k; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      throw bad();
    }
  };
  std::int64_t n = to_i64(ns, true);
  std::int64_t d = to_i64(ds, false);
  if (d <= 0) throw bad();
  return Rat(n, d);
}

}  // namespace dihull
