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
#include <utility>
#include <vector>

#include "dihull/hull.hpp"
#include "dihull/qspace.hpp"

namespace dihull {

// A point cloud together with its induced quasi-metric space. The vector
// operations on the hull live here: they need the ambient linear structure,
// not just the distance matrix.
template <typename S>
struct CloudSpace {
  PointCloud<S> cloud;
  QSpace<S> space;

  static CloudSpace make(PointCloud<S> pc, const S& eps = scalar_traits<S>::zero()) {
    QSpace<S> qs = induce_qspace(pc, eps);
    return CloudSpace{std::move(pc), std::move(qs)};
  }

  int size() const { return cloud.size(); }

  std::optional<int> index_of(const Vec<S>& w, const S& eps = scalar_traits<S>::zero()) const {
    for (int i = 0; i < size(); ++i) {
      bool same = true;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (!approx_eq(cloud.points[i][k], w[k], eps)) {
          same = false;
          break;
        }
      if (same) return i;
    }
    return std::nullopt;
  }
};

// Evaluation of a hull point at arbitrary vectors through the canonical
// sup-representation over the base set:
//   ext1(w) = (max_i ||p_i - w|| - f2[i])^+,  ext2(w) = (max_i ||w - p_i|| - f1[i])^+.
// Both agree with the stored values at base points and are convex in w.
template <typename S>
class ExtendedEval {
 public:
  ExtendedEval(const CloudSpace<S>& cs, const HullPoint<S>& p)
      : cs_(&cs), p_(&p) {
    if (static_cast<int>(p.f1().size()) != cs.size())
      throw DimensionMismatch("ExtendedEval: pair not over this cloud");
  }

  S ext1(const Vec<S>& w) const {
    S best = scalar_traits<S>::zero();
    for (int i = 0; i < cs_->size(); ++i) {
      S v = gauge_eval(cs_->cloud.gauge, vec_sub(cs_->cloud.points[i], w)) - p_->f2()[i];
      if (v > best) best = v;
    }
    return best;
  }

  S ext2(const Vec<S>& w) const {
    S best = scalar_traits<S>::zero();
    for (int i = 0; i < cs_->size(); ++i) {
      S v = gauge_eval(cs_->cloud.gauge, vec_sub(w, cs_->cloud.points[i])) - p_->f1()[i];
      if (v > best) best = v;
    }
    return best;
  }

 private:
  const CloudSpace<S>* cs_;
  const HullPoint<S>* p_;
};

// Barycentric weight, kept in [0,1].
template <typename S>
struct Lambda {
  S value;

  explicit Lambda(const S& v) : value(v) {
    if (v < scalar_traits<S>::zero() || S(1) < v)
      throw ValidationError("lambda outside [0,1]");
  }
};

namespace detail {

template <typename S>
HullPoint<S> certify_candidate(const CloudSpace<S>& cs, FunctionPair<S> cand,
                               const char* op, const S& eps) {
  auto amp = is_ample(cs.space, cand, eps);
  if (!amp.ok)
    throw AmplenessLost(std::string(op) + ": candidate lost ampleness (" +
                        (amp.witness ? amp.witness->describe() : "") +
                        "); base set too coarse");
  return minimize(cs.space, cand, eps).point;
}

}  // namespace detail

// Scalar action on the hull. For t>0 the components rescale through the
// extension, t=0 collapses to the gauge of the base points, and t<0 swaps
// components. The discretized candidate is ample-checked and re-minimized.
template <typename S>
HullPoint<S> scalar_mul(const CloudSpace<S>& cs, const S& t, const HullPoint<S>& f,
                        const S& eps = scalar_traits<S>::zero()) {
  const int n = cs.size();
  const S zero = scalar_traits<S>::zero();
  ExtendedEval<S> ext(cs, f);
  FunctionPair<S> cand;
  cand.f1.resize(n);
  cand.f2.resize(n);
  if (t > zero) {
    S inv = S(1) / t;
    for (int j = 0; j < n; ++j) {
      Vec<S> w = vec_scale(inv, cs.cloud.points[j]);
      cand.f1[j] = t * ext.ext1(w);
      cand.f2[j] = t * ext.ext2(w);
    }
  } else if (t == zero) {
    for (int j = 0; j < n; ++j) {
      S v = gauge_eval(cs.cloud.gauge, cs.cloud.points[j]);
      cand.f1[j] = v;
      cand.f2[j] = v;
    }
  } else {
    S inv = S(1) / t;
    S a = scalar_traits<S>::abs(t);
    for (int j = 0; j < n; ++j) {
      Vec<S> w = vec_scale(inv, cs.cloud.points[j]);
      cand.f1[j] = a * ext.ext2(w);
      cand.f2[j] = a * ext.ext1(w);
    }
  }
  return detail::certify_candidate(cs, std::move(cand), "scalar_mul", eps);
}

// Sup-convolution with the supremum discretized to the base set; the left
// operand is read through its extension.
//   h1[j] = (max_z ext1(f)(p_j - p_z) - g2[z])^+
//   h2[j] = (max_z ext2(f)(p_j - p_z) - g1[z])^+
template <typename S>
HullPoint<S> oplus(const CloudSpace<S>& cs, const HullPoint<S>& f,
                   const HullPoint<S>& g, const S& eps = scalar_traits<S>::zero()) {
  const int n = cs.size();
  ExtendedEval<S> ext(cs, f);
  FunctionPair<S> cand;
  cand.f1.resize(n);
  cand.f2.resize(n);
  for (int j = 0; j < n; ++j) {
    S b1 = scalar_traits<S>::zero();
    S b2 = scalar_traits<S>::zero();
    for (int z = 0; z < n; ++z) {
      Vec<S> w = vec_sub(cs.cloud.points[j], cs.cloud.points[z]);
      S v1 = ext.ext1(w) - g.f2()[z];
      if (v1 > b1) b1 = v1;
      S v2 = ext.ext2(w) - g.f1()[z];
      if (v2 > b2) b2 = v2;
    }
    cand.f1[j] = b1;
    cand.f2[j] = b2;
  }
  return detail::certify_candidate(cs, std::move(cand), "oplus", eps);
}

// W(f,g,lambda) = lambda f (+) (1-lambda) g.
template <typename S>
HullPoint<S> w_lift(const CloudSpace<S>& cs, const HullPoint<S>& f,
                    const HullPoint<S>& g, const Lambda<S>& lam,
                    const S& eps = scalar_traits<S>::zero()) {
  HullPoint<S> a = scalar_mul(cs, lam.value, f, eps);
  HullPoint<S> b = scalar_mul(cs, S(1) - lam.value, g, eps);
  return oplus(cs, a, b, eps);
}

// Both sides of i(W(x,y,lambda)) = W(i(x), i(y), lambda), compared
// componentwise. The affine combination must itself be a base point.
template <typename S>
bool intertwine_check(const CloudSpace<S>& cs, int i, int j, const Lambda<S>& lam,
                      const S& eps = scalar_traits<S>::zero()) {
  const int n = cs.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw IndexOutOfRange("intertwine_check: base index out of range");
  Vec<S> combo = vec_add(vec_scale(lam.value, cs.cloud.points[i]),
                         vec_scale(S(1) - lam.value, cs.cloud.points[j]));
  auto idx = cs.index_of(combo, eps);
  if (!idx)
    throw OffGridCombination("intertwine_check: affine combination is not a base point");
  HullPoint<S> lhs = embed(cs.space, *idx, eps);
  HullPoint<S> rhs = w_lift(cs, embed(cs.space, i, eps), embed(cs.space, j, eps), lam, eps);
  return pair_approx_eq(lhs.pair(), rhs.pair(), eps);
}

template <typename S>
struct SegmentCell {
  S actual;
  S predicted;
  bool match;
};

template <typename S>
struct SegmentResult {
  std::vector<Lambda<S>> lambdas;
  std::vector<HullPoint<S>> points;
  S alpha, beta;
  // table[a][b] compares q_E(h_{lambda_a}, h_{lambda_b}) against the
  // parametrisation law (lambda_a - lambda_b) alpha resp. (lambda_b - lambda_a) beta.
  std::vector<std::vector<SegmentCell<S>>> table;
  bool all_match = true;
};

template <typename S>
SegmentResult<S> segment(const CloudSpace<S>& cs, const HullPoint<S>& f,
                         const HullPoint<S>& g, const std::vector<Lambda<S>>& lams,
                         const S& eps = scalar_traits<S>::zero()) {
  SegmentResult<S> r{lams, {}, q_hull(cs.space, f, g, eps),
                     q_hull(cs.space, g, f, eps), {}, true};
  r.points.reserve(lams.size());
  for (const auto& l : lams) r.points.push_back(w_lift(cs, f, g, l, eps));
  r.table.resize(lams.size());
  for (std::size_t a = 0; a < lams.size(); ++a) {
    r.table[a].reserve(lams.size());
    for (std::size_t b = 0; b < lams.size(); ++b) {
      S actual = q_hull(cs.space, r.points[a], r.points[b], eps);
      S la = lams[a].value, lb = lams[b].value;
      S predicted = la >= lb ? (la - lb) * r.alpha : (lb - la) * r.beta;
      bool match = approx_eq(actual, predicted, eps);
      if (!match) r.all_match = false;
      r.table[a].push_back({actual, predicted, match});
    }
  }
  return r;
}

}  // namespace dihull
