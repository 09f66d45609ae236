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
#include <optional>
#include <utility>
#include <vector>

#include "dihull/hull.hpp"

namespace dihull {

// A finite set of certified hull points over one base space, with an
// optional ambient universe used by closure computations.
template <typename S>
struct HullSubset {
  QSpace<S> space;
  std::vector<HullPoint<S>> elements;
  std::optional<std::vector<HullPoint<S>>> universe;

  HullSubset(QSpace<S> sp, std::vector<HullPoint<S>> elems,
             std::optional<std::vector<HullPoint<S>>> univ = std::nullopt)
      : space(std::move(sp)), elements(std::move(elems)), universe(std::move(univ)) {
    if (elements.empty()) throw EmptySetError("HullSubset: empty element list");
    for (const auto& e : elements)
      if (static_cast<int>(e.f1().size()) != space.size())
        throw DimensionMismatch("HullSubset: element not over this space");
    if (universe) {
      for (const auto& e : elements)
        if (std::find(universe->begin(), universe->end(), e) == universe->end())
          throw ValidationError("HullSubset: element missing from universe");
    }
  }

  int count() const { return static_cast<int>(elements.size()); }
};

template <typename S>
struct Radii {
  S r_q, r_qt, r;
};

template <typename S>
Radii<S> radii(const HullSubset<S>& a, const HullPoint<S>& f,
               const S& eps = scalar_traits<S>::zero()) {
  S rq = scalar_traits<S>::zero();
  S rqt = scalar_traits<S>::zero();
  for (const auto& g : a.elements) {
    rq = std::max(rq, q_hull(a.space, f, g, eps));
    rqt = std::max(rqt, q_hull(a.space, g, f, eps));
  }
  return {rq, rqt, std::max(rq, rqt)};
}

template <typename S>
struct CenterInfo {
  S r;
  std::vector<int> center;  // indices into elements attaining r
  S diam;                   // with respect to q_E, not its symmetrization
};

template <typename S>
CenterInfo<S> center_and_diameter(const HullSubset<S>& a,
                                  const S& eps = scalar_traits<S>::zero()) {
  CenterInfo<S> info;
  std::vector<S> rs;
  rs.reserve(a.elements.size());
  for (const auto& f : a.elements) rs.push_back(radii(a, f, eps).r);
  info.r = *std::min_element(rs.begin(), rs.end());
  for (int i = 0; i < a.count(); ++i)
    if (approx_eq(rs[i], info.r, eps)) info.center.push_back(i);
  info.diam = scalar_traits<S>::zero();
  for (const auto& f : a.elements)
    for (const auto& g : a.elements)
      info.diam = std::max(info.diam, q_hull(a.space, f, g, eps));
  return info;
}

template <typename S>
struct NormalStructureVerdict {
  bool applicable = false;  // diam > 0
  bool holds = false;       // r < diam
  S r, diam;
};

template <typename S>
NormalStructureVerdict<S> normal_structure_check(const HullSubset<S>& a,
                                                 const S& eps = scalar_traits<S>::zero()) {
  auto info = center_and_diameter(a, eps);
  NormalStructureVerdict<S> v;
  v.r = info.r;
  v.diam = info.diam;
  v.applicable = info.diam > eps;
  v.holds = v.applicable && info.r < info.diam - eps;
  return v;
}

// Finite-scale double closure: u belongs iff some member is at q_E-distance 0
// from u and some member is at conjugate distance 0.
template <typename S>
HullSubset<S> double_closure(const HullSubset<S>& a,
                             const S& eps = scalar_traits<S>::zero()) {
  if (!a.universe)
    throw ValidationError("double_closure: universe required");
  const S zero = scalar_traits<S>::zero();
  std::vector<HullPoint<S>> closed;
  for (const auto& u : *a.universe) {
    bool fwd = false, bwd = false;
    for (const auto& g : a.elements) {
      if (!fwd && approx_eq(q_hull(a.space, u, g, eps), zero, eps)) fwd = true;
      if (!bwd && approx_eq(q_hull(a.space, g, u, eps), zero, eps)) bwd = true;
      if (fwd && bwd) break;
    }
    if (fwd && bwd) closed.push_back(u);
  }
  return HullSubset<S>(a.space, std::move(closed), a.universe);
}

template <typename S>
bool is_doubly_closed(const HullSubset<S>& a, const S& eps = scalar_traits<S>::zero()) {
  auto c = double_closure(a, eps);
  if (c.count() != a.count()) return false;
  for (const auto& e : a.elements)
    if (std::find(c.elements.begin(), c.elements.end(), e) == c.elements.end())
      return false;
  return true;
}

template <typename S>
struct DescentStep {
  std::vector<int> members;  // indices into the original element list
  S r, diam;
};

template <typename S>
struct DescentTrace {
  std::vector<DescentStep<S>> chain;
  bool reached_zero_diam = false;
  bool stalled = false;  // C(A) = A with positive diameter
};

// Iterate A <- C(A) until the diameter vanishes or the center stops
// shrinking. Strict decrease of cardinality is asserted per step, so the
// trace never cycles.
template <typename S>
DescentTrace<S> cheb_descent(const HullSubset<S>& a0,
                             const S& eps = scalar_traits<S>::zero()) {
  DescentTrace<S> trace;
  std::vector<int> idx(a0.elements.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  HullSubset<S> cur = a0;
  const S zero = scalar_traits<S>::zero();
  for (;;) {
    auto info = center_and_diameter(cur, eps);
    trace.chain.push_back({idx, info.r, info.diam});
    if (approx_eq(info.diam, zero, eps)) {
      trace.reached_zero_diam = true;
      return trace;
    }
    if (static_cast<int>(info.center.size()) == cur.count()) {
      trace.stalled = true;
      return trace;
    }
    std::vector<HullPoint<S>> next;
    std::vector<int> next_idx;
    for (int c : info.center) {
      next.push_back(cur.elements[c]);
      next_idx.push_back(idx[c]);
    }
    if (next.size() >= static_cast<std::size_t>(cur.count()))
      throw NonConvergence("cheb_descent: center failed to shrink");
    cur = HullSubset<S>(cur.space, std::move(next));
    idx = std::move(next_idx);
  }
}

// Finite fragment of property (H): a descending chain of nonempty finite
// sets has nonempty intersection iff its smallest member is nonempty.
template <typename S>
bool property_h_finite(const std::vector<HullSubset<S>>& chain,
                       const S& = scalar_traits<S>::zero()) {
  if (chain.empty()) return true;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    for (const auto& e : chain[k].elements)
      if (std::find(chain[k - 1].elements.begin(), chain[k - 1].elements.end(), e) ==
          chain[k - 1].elements.end())
        throw ValidationError("property_h_finite: chain is not descending");
  }
  return chain.back().count() > 0;
}

// A self-map of a hull subset given by indices.
struct SelfMapTable {
  std::vector<int> map;

  int apply(int i) const {
    if (i < 0 || i >= static_cast<int>(map.size()))
      throw IndexOutOfRange("SelfMapTable: index out of range");
    int v = map[i];
    if (v < 0 || v >= static_cast<int>(map.size()))
      throw IndexOutOfRange("SelfMapTable: image out of range");
    return v;
  }
};

template <typename S>
struct NonexpansiveVerdict {
  bool pass = true;
  // (f, g, which inequality) for the first failure.
  std::optional<std::tuple<int, int, int>> witness;
};

template <typename S>
NonexpansiveVerdict<S> check_nonexpansive(const HullSubset<S>& a, const SelfMapTable& t,
                                          const S& eps = scalar_traits<S>::zero()) {
  if (static_cast<int>(t.map.size()) != a.count())
    throw DimensionMismatch("check_nonexpansive: map not total on domain");
  for (int i = 0; i < a.count(); ++i)
    for (int j = 0; j < a.count(); ++j) {
      const auto &f = a.elements[i], &g = a.elements[j];
      const auto &tf = a.elements[t.apply(i)], &tg = a.elements[t.apply(j)];
      if (!leq(q_hull(a.space, tf, tg, eps), q_hull(a.space, f, g, eps), eps))
        return {false, std::make_tuple(i, j, 1)};
      if (!leq(q_hull(a.space, tg, tf, eps), q_hull(a.space, g, f, eps), eps))
        return {false, std::make_tuple(i, j, 2)};
    }
  return {};
}

inline std::vector<int> fixed_points(const SelfMapTable& t) {
  std::vector<int> fix;
  for (int i = 0; i < static_cast<int>(t.map.size()); ++i)
    if (t.apply(i) == i) fix.push_back(i);
  return fix;
}

template <typename S>
struct CommonFixedResult {
  std::vector<int> common;
  // Set when the domain's descent reaches diameter zero yet the intersection
  // is empty, which would contradict the common fixed point theorem.
  bool alarm = false;
};

template <typename S>
CommonFixedResult<S> common_fixed(const HullSubset<S>& a,
                                  const std::vector<SelfMapTable>& ts,
                                  const S& eps = scalar_traits<S>::zero()) {
  for (const auto& t : ts) {
    auto v = check_nonexpansive(a, t, eps);
    if (!v.pass)
      throw ValidationError("common_fixed: map is not nonexpansive");
  }
  for (std::size_t p = 0; p < ts.size(); ++p)
    for (std::size_t q2 = p + 1; q2 < ts.size(); ++q2)
      for (int i = 0; i < a.count(); ++i)
        if (ts[p].apply(ts[q2].apply(i)) != ts[q2].apply(ts[p].apply(i)))
          throw CommutationFailure("common_fixed: maps " + std::to_string(p) + " and " +
                                   std::to_string(q2) + " do not commute at " +
                                   std::to_string(i));
  CommonFixedResult<S> r;
  for (int i = 0; i < a.count(); ++i) {
    bool all = true;
    for (const auto& t : ts)
      if (t.apply(i) != i) {
        all = false;
        break;
      }
    if (all) r.common.push_back(i);
  }
  if (r.common.empty() && !ts.empty()) {
    auto d = cheb_descent(a, eps);
    if (d.reached_zero_diam) r.alarm = true;
  }
  return r;
}

// Proof-step check: a nonexpansive T mapping A onto itself maps the
// Chebyshev center into itself. (For T(A) a proper subset the step can fail;
// the fixed point argument only ever applies it to minimal invariant sets,
// where T restricts to a bijection.)
template <typename S>
bool center_invariance_check(const HullSubset<S>& a, const SelfMapTable& t,
                             const S& eps = scalar_traits<S>::zero()) {
  auto info = center_and_diameter(a, eps);
  std::vector<char> in_center(a.count(), 0);
  for (int c : info.center) in_center[c] = 1;
  for (int c : info.center)
    if (!in_center[t.apply(c)]) return false;
  return true;
}

}  // namespace dihull
