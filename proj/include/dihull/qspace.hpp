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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dihull/errors.hpp"
#include "dihull/scalar.hpp"

namespace dihull {

template <typename S>
using Vec = std::vector<S>;

template <typename S>
class SquareMatrix {
 public:
  SquareMatrix() : n_(0) {}
  explicit SquareMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n) {}
  explicit SquareMatrix(const std::vector<std::vector<S>>& rows) {
    n_ = static_cast<int>(rows.size());
    v_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_)
        throw DimensionMismatch("matrix is not square");
      for (const auto& x : row) v_.push_back(x);
    }
  }

  int size() const { return n_; }
  const S& at(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  S& at(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.v_ == b.v_;
  }

 private:
  int n_;
  std::vector<S> v_;
};

// One violation of a quasi-metric axiom, with witnessing indices.
struct QSpaceViolation {
  enum class Kind { NegativeEntry, NonzeroDiagonal, TriangleViolation, T0Violation };
  Kind kind;
  int i = -1, j = -1, k = -1;

  std::string describe() const {
    switch (kind) {
      case Kind::NegativeEntry:
        return "NegativeEntry(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::NonzeroDiagonal:
        return "NonzeroDiagonal(" + std::to_string(i) + ")";
      case Kind::TriangleViolation:
        return "TriangleViolation(" + std::to_string(i) + "," + std::to_string(j) +
               "," + std::to_string(k) + ")";
      case Kind::T0Violation:
        return "T0Violation(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "?";
  }
};

template <typename S>
class QSpace;

// Every violated axiom is listed; `space` is set iff the matrix is clean.
template <typename S>
struct QSpaceReport {
  std::vector<QSpaceViolation> violations;
  std::optional<QSpace<S>> space;

  bool ok() const { return violations.empty(); }
  std::string describe() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.describe();
    }
    return s.empty() ? "ok" : s;
  }
};

template <typename S>
QSpaceReport<S> validate_qspace(const SquareMatrix<S>& m,
                                const S& eps = scalar_traits<S>::zero());

// A finite T0-quasi-metric space held as its distance matrix. Values exist
// only behind validate_qspace / require_qspace, so a QSpace is axiom-clean.
template <typename S>
class QSpace {
 public:
  int size() const { return m_.size(); }
  const S& q(int i, int j) const { return m_.at(i, j); }
  const SquareMatrix<S>& matrix() const { return m_; }

  friend bool operator==(const QSpace& a, const QSpace& b) { return a.m_ == b.m_; }
  friend QSpaceReport<S> validate_qspace<S>(const SquareMatrix<S>&, const S&);

 private:
  explicit QSpace(SquareMatrix<S> m) : m_(std::move(m)) {}
  SquareMatrix<S> m_;
};

template <typename S>
QSpaceReport<S> validate_qspace(const SquareMatrix<S>& m, const S& eps) {
  using VK = QSpaceViolation::Kind;
  const int n = m.size();
  const S zero = scalar_traits<S>::zero();
  QSpaceReport<S> rep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) < zero - eps)
        rep.violations.push_back({VK::NegativeEntry, i, j, -1});
  for (int i = 0; i < n; ++i)
    if (!approx_eq(m.at(i, i), zero, eps))
      rep.violations.push_back({VK::NonzeroDiagonal, i, -1, -1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!leq(m.at(i, k), m.at(i, j) + m.at(j, k), eps))
          rep.violations.push_back({VK::TriangleViolation, i, j, k});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (approx_eq(m.at(i, j), zero, eps) && approx_eq(m.at(j, i), zero, eps))
        rep.violations.push_back({VK::T0Violation, i, j});
  if (rep.ok()) rep.space = QSpace<S>(m);
  return rep;
}

template <typename S>
QSpace<S> require_qspace(const SquareMatrix<S>& m,
                         const S& eps = scalar_traits<S>::zero()) {
  auto rep = validate_qspace(m, eps);
  if (!rep.ok()) throw ValidationError("invalid quasi-metric: " + rep.describe());
  return *std::move(rep.space);
}

// q^t(x,y) = q(y,x).
template <typename S>
QSpace<S> conjugate(const QSpace<S>& s, const S& eps = scalar_traits<S>::zero()) {
  const int n = s.size();
  SquareMatrix<S> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = s.q(j, i);
  return require_qspace(m, eps);
}

// q^s = max(q, q^t); a genuine metric.
template <typename S>
QSpace<S> symmetrize(const QSpace<S>& s, const S& eps = scalar_traits<S>::zero()) {
  const int n = s.size();
  SquareMatrix<S> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = s.q(i, j) < s.q(j, i) ? s.q(j, i) : s.q(i, j);
  return require_qspace(m, eps);
}

// Polyhedral asymmetric gauge ||x|| = max(0, max_j <a_j, x>).
template <typename S>
struct AsymGauge {
  int dim = 0;
  std::vector<Vec<S>> functionals;
};

template <typename S>
S gauge_eval(const AsymGauge<S>& g, const Vec<S>& x) {
  if (static_cast<int>(x.size()) != g.dim)
    throw DimensionMismatch("gauge_eval: vector has wrong dimension");
  S best = scalar_traits<S>::zero();
  for (const auto& a : g.functionals) {
    S v = scalar_traits<S>::zero();
    for (int k = 0; k < g.dim; ++k) v += a[k] * x[k];
    if (v > best) best = v;
  }
  return best;
}

// T0 separation holds iff the functionals span the dual, i.e. the only x
// with <a_j,x> = 0 for all j is x = 0. Checked by exact Gaussian rank.
template <typename S>
bool gauge_separates(const AsymGauge<S>& g, const S& eps = scalar_traits<S>::zero()) {
  const int d = g.dim;
  std::vector<Vec<S>> rows;
  for (const auto& a : g.functionals) {
    if (static_cast<int>(a.size()) != d)
      throw DimensionMismatch("gauge functional has wrong dimension");
    rows.push_back(a);
  }
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!approx_eq(rows[r][col], scalar_traits<S>::zero(), eps)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      if (approx_eq(rows[r][col], scalar_traits<S>::zero(), eps)) continue;
      S factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < d; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank == d;
}

template <typename S>
struct PointCloud {
  AsymGauge<S> gauge;
  std::vector<Vec<S>> points;

  int size() const { return static_cast<int>(points.size()); }
};

template <typename S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

template <typename S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

template <typename S>
Vec<S> vec_scale(const S& t, const Vec<S>& a) {
  Vec<S> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = t * a[k];
  return r;
}

// q[i][j] = ||p_i - p_j||; the result is revalidated in full.
template <typename S>
QSpace<S> induce_qspace(const PointCloud<S>& pc,
                        const S& eps = scalar_traits<S>::zero()) {
  const int n = pc.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pc.points[i] == pc.points[j])
        throw ValidationError("DuplicatePoint(" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  SquareMatrix<S> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = gauge_eval(pc.gauge, vec_sub(pc.points[i], pc.points[j]));
  return require_qspace(m, eps);
}

}  // namespace dihull
