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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dihull/qspace.hpp"

namespace dihull {

// A pair (f1, f2) of real-valued vectors indexed by base points. Ample means
// q(x,y) <= f2(x) + f1(y) with both components nonnegative; a hull point is
// an ample pair that is minimal, equivalently a fixed point of the clamped
// sup-representation maps below.
template <typename S>
struct FunctionPair {
  Vec<S> f1, f2;

  friend bool operator==(const FunctionPair& a, const FunctionPair& b) {
    return a.f1 == b.f1 && a.f2 == b.f2;
  }
};

template <typename S>
bool pair_approx_eq(const FunctionPair<S>& a, const FunctionPair<S>& b, const S& eps) {
  if (a.f1.size() != b.f1.size() || a.f2.size() != b.f2.size()) return false;
  for (std::size_t k = 0; k < a.f1.size(); ++k)
    if (!approx_eq(a.f1[k], b.f1[k], eps)) return false;
  for (std::size_t k = 0; k < a.f2.size(); ++k)
    if (!approx_eq(a.f2[k], b.f2[k], eps)) return false;
  return true;
}

// f1'[j] = (max_i q(i,j) - f2(i))^+ : the clamped sup-representation of the
// first component from the second.
template <typename S>
Vec<S> suprep_first(const QSpace<S>& s, const Vec<S>& f2) {
  const int n = s.size();
  Vec<S> out(n);
  for (int j = 0; j < n; ++j) {
    S best = scalar_traits<S>::zero();
    for (int i = 0; i < n; ++i) {
      S v = s.q(i, j) - f2[i];
      if (v > best) best = v;
    }
    out[j] = best;
  }
  return out;
}

template <typename S>
Vec<S> suprep_second(const QSpace<S>& s, const Vec<S>& f1) {
  const int n = s.size();
  Vec<S> out(n);
  for (int i = 0; i < n; ++i) {
    S best = scalar_traits<S>::zero();
    for (int j = 0; j < n; ++j) {
      S v = s.q(i, j) - f1[j];
      if (v > best) best = v;
    }
    out[i] = best;
  }
  return out;
}

struct AmpleWitness {
  enum class Kind { NegativeF1, NegativeF2, Gap };
  Kind kind;
  int i = -1, j = -1;

  std::string describe() const {
    switch (kind) {
      case Kind::NegativeF1:
        return "f1[" + std::to_string(i) + "] < 0";
      case Kind::NegativeF2:
        return "f2[" + std::to_string(i) + "] < 0";
      case Kind::Gap:
        return "q(" + std::to_string(i) + "," + std::to_string(j) + ") > f2[" +
               std::to_string(i) + "] + f1[" + std::to_string(j) + "]";
    }
    return "?";
  }
};

template <typename S>
struct AmpleCheck {
  bool ok = false;
  std::optional<AmpleWitness> witness;
};

template <typename S>
AmpleCheck<S> is_ample(const QSpace<S>& s, const FunctionPair<S>& p,
                       const S& eps = scalar_traits<S>::zero()) {
  using WK = AmpleWitness::Kind;
  const int n = s.size();
  if (static_cast<int>(p.f1.size()) != n || static_cast<int>(p.f2.size()) != n)
    throw DimensionMismatch("is_ample: pair not dimensioned to the space");
  const S zero = scalar_traits<S>::zero();
  for (int i = 0; i < n; ++i) {
    if (p.f1[i] < zero - eps) return {false, AmpleWitness{WK::NegativeF1, i, -1}};
    if (p.f2[i] < zero - eps) return {false, AmpleWitness{WK::NegativeF2, i, -1}};
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!leq(s.q(i, j), p.f2[i] + p.f1[j], eps))
        return {false, AmpleWitness{WK::Gap, i, j}};
  return {true, std::nullopt};
}

template <typename S>
bool is_minimal(const QSpace<S>& s, const FunctionPair<S>& p,
                const S& eps = scalar_traits<S>::zero()) {
  const int n = s.size();
  if (static_cast<int>(p.f1.size()) != n || static_cast<int>(p.f2.size()) != n)
    throw DimensionMismatch("is_minimal: pair not dimensioned to the space");
  if (!is_ample(s, p, eps).ok) return false;
  Vec<S> a = suprep_first(s, p.f2);
  for (int j = 0; j < n; ++j)
    if (!approx_eq(a[j], p.f1[j], eps)) return false;
  Vec<S> b = suprep_second(s, p.f1);
  for (int i = 0; i < n; ++i)
    if (!approx_eq(b[i], p.f2[i], eps)) return false;
  return true;
}

// A FunctionPair that passed the minimality certificate at construction.
template <typename S>
class HullPoint {
 public:
  HullPoint(const QSpace<S>& s, FunctionPair<S> p,
            const S& eps = scalar_traits<S>::zero())
      : pair_(std::move(p)) {
    if (!is_minimal(s, pair_, eps))
      throw ValidationError("HullPoint: pair is not a minimal ample pair");
  }

  const FunctionPair<S>& pair() const { return pair_; }
  const Vec<S>& f1() const { return pair_.f1; }
  const Vec<S>& f2() const { return pair_.f2; }

  friend bool operator==(const HullPoint& a, const HullPoint& b) {
    return a.pair_ == b.pair_;
  }

 private:
  FunctionPair<S> pair_;
};

template <typename S>
struct MinimizeResult {
  HullPoint<S> point;
  int sweeps = 0;
  // Pair after each completed sweep; every entry was ample when recorded.
  std::vector<FunctionPair<S>> trace;
};

// Alternating clamped sup-representation updates. One sweep is
// g1 <- suprep_first(f2), g2 <- suprep_second(g1); the iteration is monotone
// nonincreasing and in fact stabilizes after the first sweep, but the loop
// keeps the 2n+2 guard as an internal-error tripwire.
template <typename S>
MinimizeResult<S> minimize(const QSpace<S>& s, const FunctionPair<S>& p,
                           const S& eps = scalar_traits<S>::zero()) {
  auto amp = is_ample(s, p, eps);
  if (!amp.ok)
    throw ValidationError("minimize: input is not ample (" +
                          (amp.witness ? amp.witness->describe() : "") + ")");
  FunctionPair<S> cur = p;
  std::vector<FunctionPair<S>> trace;
  const int cap = 2 * s.size() + 2;
  for (int sweep = 1; sweep <= cap; ++sweep) {
    FunctionPair<S> next;
    next.f1 = suprep_first(s, cur.f2);
    if (!is_ample(s, FunctionPair<S>{next.f1, cur.f2}, eps).ok)
      throw NonConvergence("minimize: ampleness lost mid-sweep");
    next.f2 = suprep_second(s, next.f1);
    if (!is_ample(s, next, eps).ok)
      throw NonConvergence("minimize: ampleness lost after sweep");
    trace.push_back(next);
    if (pair_approx_eq(next, cur, eps))
      return {HullPoint<S>(s, next, eps), sweep, std::move(trace)};
    cur = next;
  }
  throw NonConvergence("minimize: no fixed point within 2n+2 sweeps");
}

template <typename S>
HullPoint<S> embed(const QSpace<S>& s, int i,
                   const S& eps = scalar_traits<S>::zero()) {
  const int n = s.size();
  if (i < 0 || i >= n) throw IndexOutOfRange("embed: index out of range");
  FunctionPair<S> p;
  p.f1.resize(n);
  p.f2.resize(n);
  for (int j = 0; j < n; ++j) {
    p.f1[j] = s.q(i, j);
    p.f2[j] = s.q(j, i);
  }
  return HullPoint<S>(s, std::move(p), eps);
}

// Hull quasi-metric q_E(f,g) = max_x (g1(x) - f1(x))^+. The dual formula
// max_x (f2(x) - g2(x))^+ is evaluated alongside and must agree; a mismatch
// means a non-minimal pair slipped through certification.
template <typename S>
S q_hull(const QSpace<S>& s, const HullPoint<S>& f, const HullPoint<S>& g,
         const S& eps = scalar_traits<S>::zero()) {
  const int n = s.size();
  if (static_cast<int>(f.f1().size()) != n || static_cast<int>(g.f1().size()) != n)
    throw DimensionMismatch("q_hull: points not over this space");
  S primal = scalar_traits<S>::zero();
  S dual = scalar_traits<S>::zero();
  for (int x = 0; x < n; ++x) {
    S a = g.f1()[x] - f.f1()[x];
    if (a > primal) primal = a;
    S b = f.f2()[x] - g.f2()[x];
    if (b > dual) dual = b;
  }
  if (!approx_eq(primal, dual, eps))
    throw DualFormulaMismatch("q_hull: primal " + scalar_traits<S>::str(primal) +
                              " != dual " + scalar_traits<S>::str(dual));
  return primal;
}

// q_E^t(f,g) = q_E(g,f); both sup-difference renderings of the conjugate are
// recomputed here so all four variants get cross-checked.
template <typename S>
S q_hull_conjugate(const QSpace<S>& s, const HullPoint<S>& f, const HullPoint<S>& g,
                   const S& eps = scalar_traits<S>::zero()) {
  S v = q_hull(s, g, f, eps);
  const int n = s.size();
  S first = scalar_traits<S>::zero();
  S second = scalar_traits<S>::zero();
  for (int x = 0; x < n; ++x) {
    S a = f.f1()[x] - g.f1()[x];
    if (a > first) first = a;
    S b = g.f2()[x] - f.f2()[x];
    if (b > second) second = b;
  }
  if (!approx_eq(v, first, eps) || !approx_eq(v, second, eps))
    throw DualFormulaMismatch("q_hull_conjugate: formula variants disagree");
  return v;
}

template <typename S>
struct T0CheckResult {
  S d_fg, d_gf;
  bool both_zero = false;
  bool equal = false;

  // T0 demands: both directed distances zero implies componentwise equality.
  bool ok() const { return !both_zero || equal; }
};

template <typename S>
T0CheckResult<S> hull_t0_check(const QSpace<S>& s, const HullPoint<S>& f,
                               const HullPoint<S>& g,
                               const S& eps = scalar_traits<S>::zero()) {
  T0CheckResult<S> r{q_hull(s, f, g, eps), q_hull(s, g, f, eps), false, false};
  const S zero = scalar_traits<S>::zero();
  r.both_zero = approx_eq(r.d_fg, zero, eps) && approx_eq(r.d_gf, zero, eps);
  r.equal = pair_approx_eq(f.pair(), g.pair(), eps);
  return r;
}

}  // namespace dihull
