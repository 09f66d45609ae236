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

#include "dihull/harness.hpp"

#include <chrono>
#include <iostream>
#include <optional>

#include "dihull/chebyshev.hpp"
#include "dihull/convexity.hpp"
#include "dihull/corpus.hpp"
#include "dihull/search.hpp"

namespace dihull {

namespace {

template <typename S>
S eps_for(double tol);
template <>
Rat eps_for<Rat>(double) {
  return Rat(0);
}
template <>
double eps_for<double>(double tol) {
  return tol;
}

template <typename S>
json num_json(const S& v) {
  return json(scalar_traits<S>::str(v));
}

template <typename S>
json pair_json(const FunctionPair<S>& p, bool minimal) {
  json j;
  json f1 = json::array(), f2 = json::array();
  for (const auto& v : p.f1) f1.push_back(num_json(v));
  for (const auto& v : p.f2) f2.push_back(num_json(v));
  j["f1"] = f1;
  j["f2"] = f2;
  j["minimal"] = minimal;
  return j;
}

struct Verdicts {
  json arr = json::array();
  bool all = true;

  void add(const std::string& name, bool pass, json detail = json()) {
    json v;
    v["name"] = name;
    v["pass"] = pass;
    if (!detail.is_null()) v["detail"] = detail;
    arr.push_back(v);
    all = all && pass;
  }
};

// Instance view in the scalar of the active mode.
template <typename S>
struct Workspace {
  S eps;
  std::optional<CloudSpace<S>> cs;  // set for point clouds
  std::optional<QSpace<S>> qs;      // set for raw matrices
  const QSpace<S>& space() const { return cs ? cs->space : *qs; }
};

template <typename S>
SquareMatrix<S> convert_matrix(const SquareMatrix<Rat>& m);
template <>
SquareMatrix<Rat> convert_matrix<Rat>(const SquareMatrix<Rat>& m) {
  return m;
}
template <>
SquareMatrix<double> convert_matrix<double>(const SquareMatrix<Rat>& m) {
  return matrix_to_double(m);
}

template <typename S>
PointCloud<S> convert_cloud(const PointCloud<Rat>& pc);
template <>
PointCloud<Rat> convert_cloud<Rat>(const PointCloud<Rat>& pc) {
  return pc;
}
template <>
PointCloud<double> convert_cloud<double>(const PointCloud<Rat>& pc) {
  return cloud_to_double(pc);
}

template <typename S>
Workspace<S> make_workspace(const Instance& inst, double tol) {
  Workspace<S> w{eps_for<S>(tol), std::nullopt, std::nullopt};
  if (inst.is_cloud()) {
    w.cs = CloudSpace<S>::make(convert_cloud<S>(inst.cloud()), w.eps);
  } else {
    w.qs = require_qspace(convert_matrix<S>(inst.matrix()), w.eps);
  }
  return w;
}

template <typename S>
S param_num(const json& j) {
  return scalar_traits<S>::from_rat(rat_from_json(j));
}

// {"embed": k} or {"pair": {"f1": [...], "f2": [...]}}
template <typename S>
HullPoint<S> resolve_point(const Workspace<S>& w, const json& desc) {
  if (desc.contains("embed")) return embed(w.space(), desc.at("embed").get<int>(), w.eps);
  if (desc.contains("pair")) {
    const json& pj = desc.at("pair");
    FunctionPair<S> p;
    for (const auto& e : pj.at("f1")) p.f1.push_back(param_num<S>(e));
    for (const auto& e : pj.at("f2")) p.f2.push_back(param_num<S>(e));
    return HullPoint<S>(w.space(), std::move(p), w.eps);
  }
  throw ParseError("point spec needs 'embed' or 'pair'");
}

template <typename S>
std::vector<S> grid_from_json(const json& j) {
  std::vector<S> g;
  for (const auto& e : j) g.push_back(param_num<S>(e));
  return g;
}

json violations_json(const std::vector<QSpaceViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(v.describe());
  return arr;
}

// ---------------------------------------------------------------------------
// validate

template <typename S>
void run_validate(const Workspace<S>&, const Instance& inst, double tol, json& results,
                  Verdicts& verdicts) {
  // Re-derive the matrix without certification so violations are reported,
  // not thrown.
  S eps = eps_for<S>(tol);
  json res;
  std::vector<QSpaceViolation> violations;
  bool gauge_ok = true, points_ok = true;
  if (inst.is_cloud()) {
    PointCloud<S> pc = convert_cloud<S>(inst.cloud());
    gauge_ok = gauge_separates(pc.gauge, eps);
    const int n = pc.size();
    for (int i = 0; i < n && points_ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pc.points[i] == pc.points[j]) {
          points_ok = false;
          res["duplicate_point"] = json::array({i, j});
          break;
        }
    if (points_ok) {
      SquareMatrix<S> m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(i, j) = gauge_eval(pc.gauge, vec_sub(pc.points[i], pc.points[j]));
      violations = validate_qspace(m, eps).violations;
    }
    res["gauge_separates"] = gauge_ok;
  } else {
    violations = validate_qspace(convert_matrix<S>(inst.matrix()), eps).violations;
  }
  res["violations"] = violations_json(violations);
  bool ok = gauge_ok && points_ok && violations.empty();
  res["valid"] = ok;
  results["validate"] = res;
  verdicts.add("instance_valid", ok);
}

// ---------------------------------------------------------------------------
// suite battery

bool is_rstandard(const QSpace<Rat>& s) {
  if (s.size() != 3) return false;
  const int expect[3][3] = {{0, 0, 0}, {1, 0, 0}, {2, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (s.q(i, j) != Rat(expect[i][j])) return false;
  return true;
}

template <typename S>
void suite_embedding_isometry(const Workspace<S>& w, json& results, Verdicts& verdicts) {
  const auto& s = w.space();
  bool ok = true;
  int checked = 0;
  for (int i = 0; i < s.size() && ok; ++i)
    for (int j = 0; j < s.size(); ++j) {
      ++checked;
      if (!approx_eq(q_hull(s, embed(s, i, w.eps), embed(s, j, w.eps), w.eps), s.q(j, i),
                     w.eps)) {
        ok = false;
        break;
      }
    }
  results["embedding_isometry"] = json{{"pairs", checked}, {"pass", ok}};
  verdicts.add("embedding_isometry", ok);
}

template <typename S>
void suite_triangle_t0(const Workspace<S>& w, Rng& rng, int triples, json& results,
                       Verdicts& verdicts) {
  const auto& s = w.space();
  std::vector<HullPoint<S>> pool;
  for (int t = 0; t < 24; ++t) {
    FunctionPair<S> p;
    p.f2.resize(s.size());
    for (auto& v : p.f2)
      v = scalar_traits<S>::from_rat(Rat(static_cast<std::int64_t>(draw(rng, 13)), 4));
    p.f1 = suprep_first(s, p.f2);
    pool.push_back(minimize(s, p, w.eps).point);
  }
  for (int i = 0; i < s.size(); ++i) pool.push_back(embed(s, i, w.eps));
  bool tri_ok = true, t0_ok = true;
  S worst = scalar_traits<S>::zero();
  for (int t = 0; t < triples; ++t) {
    const auto& f = pool[draw(rng, pool.size())];
    const auto& g = pool[draw(rng, pool.size())];
    const auto& h = pool[draw(rng, pool.size())];
    S slack = q_hull(s, f, h, w.eps) -
              (q_hull(s, f, g, w.eps) + q_hull(s, g, h, w.eps));
    if (slack > worst) worst = slack;
    if (slack > w.eps) tri_ok = false;
    if (!hull_t0_check(s, f, g, w.eps).ok()) t0_ok = false;
  }
  results["triangle_t0"] = json{{"triples", triples},
                                {"triangle_pass", tri_ok},
                                {"t0_pass", t0_ok},
                                {"max_slack", num_json(pos_part(worst))}};
  verdicts.add("q_hull_triangle", tri_ok);
  verdicts.add("q_hull_t0", t0_ok);
}

template <typename S>
void suite_minimize(const Workspace<S>& w, Rng& rng, int count, bool rstandard,
                    json& results, Verdicts& verdicts) {
  const auto& s = w.space();
  bool ok = true;
  const int cap = 2 * s.size() + 2;
  for (int t = 0; t < count && ok; ++t) {
    FunctionPair<S> p;
    p.f2.resize(s.size());
    for (auto& v : p.f2)
      v = scalar_traits<S>::from_rat(Rat(static_cast<std::int64_t>(draw(rng, 13)), 4));
    p.f1 = suprep_first(s, p.f2);
    for (auto& v : p.f1)
      v = v + scalar_traits<S>::from_rat(Rat(static_cast<std::int64_t>(draw(rng, 5)), 2));
    auto res = minimize(s, p, w.eps);
    if (res.sweeps > cap) ok = false;
    for (int j = 0; j < s.size(); ++j)
      if (!leq(res.point.f1()[j], p.f1[j], w.eps) ||
          !leq(res.point.f2()[j], p.f2[j], w.eps))
        ok = false;
    if (minimize(s, res.point.pair(), w.eps).sweeps != 1) ok = false;
  }
  json mj{{"pairs", count}, {"pass", ok}};
  if (rstandard) {
    FunctionPair<S> p;
    for (int v : {2, 1, 1}) p.f1.push_back(S(v));
    for (int v : {1, 1, 2}) p.f2.push_back(S(v));
    auto res = minimize(s, p, w.eps);
    bool match = pair_approx_eq(res.point.pair(), embed(s, 0, w.eps).pair(), w.eps);
    mj["worked_example"] = json{{"output", pair_json(res.point.pair(), true)},
                                {"equals_embed_0", match}};
    ok = ok && match;
    mj["pass"] = ok;
  }
  results["minimize"] = mj;
  verdicts.add("minimize_properties", ok);
}

template <typename S>
void suite_hull_algebra(const Workspace<S>& w, json& results, Verdicts& verdicts) {
  const auto& cs = *w.cs;
  const int n = cs.size();
  bool ok = true;
  int compat = 0, inter = 0, skipped = 0;
  for (int x = 0; x < n && compat < 400; ++x)
    for (int y = 0; y < n && compat < 400; ++y) {
      auto sum = cs.index_of(vec_add(cs.cloud.points[x], cs.cloud.points[y]), w.eps);
      if (!sum) continue;
      ++compat;
      auto lhs = oplus(cs, embed(cs.space, x, w.eps), embed(cs.space, y, w.eps), w.eps);
      if (!(pair_approx_eq(lhs.pair(), embed(cs.space, *sum, w.eps).pair(), w.eps)))
        ok = false;
    }
  const std::vector<Rat> lams{Rat(0), Rat(1, 2), Rat(1)};
  for (int i = 0; i < n && inter < 400; ++i)
    for (int j = 0; j < n && inter < 400; ++j)
      for (const auto& lr : lams) {
        S lam = scalar_traits<S>::from_rat(lr);
        Vec<S> combo = vec_add(vec_scale(lam, cs.cloud.points[i]),
                               vec_scale(S(1) - lam, cs.cloud.points[j]));
        // all referenced points must be base points for exactness
        if (!cs.index_of(combo, w.eps) ||
            !cs.index_of(vec_scale(lam, cs.cloud.points[i]), w.eps) ||
            !cs.index_of(vec_scale(S(1) - lam, cs.cloud.points[j]), w.eps))
          continue;
        try {
          ++inter;
          if (!intertwine_check(cs, i, j, Lambda<S>(lam), w.eps)) ok = false;
        } catch (const AmplenessLost&) {
          --inter;
          ++skipped;
        }
      }
  results["hull_algebra"] = json{{"compat_cases", compat},
                                 {"intertwine_cases", inter},
                                 {"skipped_coarse_base", skipped},
                                 {"pass", ok}};
  verdicts.add("hull_algebra", ok);
}

template <typename S>
void suite_lifted_convexity(const Workspace<S>& w, json& results, Verdicts& verdicts) {
  const auto& cs = *w.cs;
  const int n = cs.size();
  bool ok = true;
  int triples = 0;
  S worst = scalar_traits<S>::zero();
  const Rat half(1, 2);
  for (int i = 0; i < n && triples < 400; ++i)
    for (int j = 0; j < n && triples < 400; ++j) {
      S lam = scalar_traits<S>::from_rat(half);
      Vec<S> combo = vec_add(vec_scale(lam, cs.cloud.points[i]),
                             vec_scale(S(1) - lam, cs.cloud.points[j]));
      if (!cs.index_of(combo, w.eps) ||
          !cs.index_of(vec_scale(lam, cs.cloud.points[i]), w.eps) ||
          !cs.index_of(vec_scale(S(1) - lam, cs.cloud.points[j]), w.eps))
        continue;
      auto f = embed(cs.space, i, w.eps), g = embed(cs.space, j, w.eps);
      HullPoint<S> lifted = w_lift(cs, f, g, Lambda<S>(lam), w.eps);
      for (int k = 0; k < n; ++k) {
        ++triples;
        auto h = embed(cs.space, k, w.eps);
        S rhs1 = lam * q_hull(cs.space, h, f, w.eps) +
                 (S(1) - lam) * q_hull(cs.space, h, g, w.eps);
        S rhs2 = lam * q_hull(cs.space, f, h, w.eps) +
                 (S(1) - lam) * q_hull(cs.space, g, h, w.eps);
        S s1 = q_hull(cs.space, h, lifted, w.eps) - rhs1;
        S s2 = q_hull(cs.space, lifted, h, w.eps) - rhs2;
        if (s1 > worst) worst = s1;
        if (s2 > worst) worst = s2;
        if (s1 > w.eps || s2 > w.eps) ok = false;
      }
    }
  results["lifted_convexity"] = json{{"embedded_triples", triples},
                                     {"pass", ok},
                                     {"max_slack", num_json(pos_part(worst))}};
  verdicts.add("lifted_convexity", ok);
}

template <typename S>
void suite_wconvex(const Workspace<S>& w, Rng& rng, int samples, json& results,
                   Verdicts& verdicts) {
  const auto& cs = *w.cs;
  const int n = cs.size();
  std::vector<std::tuple<int, int, S>> sample_list;
  const std::vector<Rat> lams{Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4)};
  for (int t = 0; t < samples; ++t)
    sample_list.emplace_back(static_cast<int>(draw(rng, n)),
                             static_cast<int>(draw(rng, n)),
                             scalar_traits<S>::from_rat(lams[draw(rng, lams.size())]));
  bool ok = true;
  std::vector<HullPoint<S>> pool;
  for (int t = 0; t < 12; ++t) {
    FunctionPair<S> p;
    p.f2.resize(n);
    for (auto& v : p.f2)
      v = scalar_traits<S>::from_rat(Rat(static_cast<std::int64_t>(draw(rng, 13)), 4));
    p.f1 = suprep_first(cs.space, p.f2);
    pool.push_back(minimize(cs.space, p, w.eps).point);
  }
  for (int i = 0; i < n; ++i) pool.push_back(embed(cs.space, i, w.eps));
  int checked = 0;
  for (const auto& h : pool) {
    if (!check_wconvex_pair(cs, h, sample_list, w.eps).pass) ok = false;
    ++checked;
  }
  // stability under the hull operations
  try {
    auto sm = scalar_mul(cs, scalar_traits<S>::from_rat(Rat(1, 2)), pool.front(), w.eps);
    if (!check_wconvex_pair(cs, sm, sample_list, w.eps).pass) ok = false;
    auto op = oplus(cs, pool.front(), embed(cs.space, 0, w.eps), w.eps);
    if (!check_wconvex_pair(cs, op, sample_list, w.eps).pass) ok = false;
    checked += 2;
  } catch (const AmplenessLost&) {
  }
  results["wconvex"] =
      json{{"points", checked}, {"jensen_samples", samples}, {"pass", ok}};
  verdicts.add("wconvex_pairs", ok);
}

template <typename S>
void suite_segment(const Workspace<S>& w, json& results, Verdicts& verdicts) {
  const auto& cs = *w.cs;
  auto f = embed(cs.space, 0, w.eps);
  auto g = embed(cs.space, cs.size() - 1, w.eps);
  std::vector<Lambda<S>> lams;
  for (const auto& r : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)})
    lams.emplace_back(scalar_traits<S>::from_rat(r));
  json sj;
  try {
    auto seg = segment(cs, f, g, lams, w.eps);
    bool endpoints = true;
    for (std::size_t a = 0; a < lams.size(); ++a) {
      if (!approx_eq(q_hull(cs.space, f, seg.points[a], w.eps),
                     (S(1) - lams[a].value) * seg.alpha, w.eps))
        endpoints = false;
      if (!approx_eq(q_hull(cs.space, seg.points[a], g, w.eps),
                     lams[a].value * seg.alpha, w.eps))
        endpoints = false;
    }
    sj["alpha"] = num_json(seg.alpha);
    sj["beta"] = num_json(seg.beta);
    sj["all_match"] = seg.all_match;
    sj["endpoint_identities"] = endpoints;
    sj["q_hull_first_last"] = num_json(seg.alpha);
    results["segment"] = sj;
    verdicts.add("segment_law", seg.all_match && endpoints);
  } catch (const AmplenessLost& e) {
    sj["status"] = std::string("ampleness_lost: ") + e.what();
    results["segment"] = sj;
  }
}

template <typename S>
void suite_chebyshev(const Workspace<S>& w, json& results, Verdicts& verdicts) {
  const auto& s = w.space();
  std::vector<HullPoint<S>> all;
  for (int i = 0; i < s.size(); ++i) all.push_back(embed(s, i, w.eps));
  HullSubset<S> a(s, all);
  auto info = center_and_diameter(a, w.eps);
  auto ns = normal_structure_check(a, w.eps);
  auto tr = cheb_descent(a, w.eps);
  json cj;
  cj["r"] = num_json(info.r);
  cj["center"] = info.center;
  cj["diam"] = num_json(info.diam);
  cj["normal_structure"] =
      json{{"applicable", ns.applicable}, {"holds", ns.holds}};
  cj["descent_chain_length"] = tr.chain.size();
  cj["descent_outcome"] = tr.reached_zero_diam ? "diam_zero" : "stalled";
  verdicts.add("center_nonempty", !info.center.empty());
  verdicts.add("descent_terminates", tr.reached_zero_diam || tr.stalled);

  if (s.size() >= 2) {
    HullSubset<S> two(s, {all.front(), all.back()});
    auto info2 = center_and_diameter(two, w.eps);
    auto tr2 = cheb_descent(two, w.eps);
    cj["two_point"] = json{{"r", num_json(info2.r)},
                           {"diam", num_json(info2.diam)},
                           {"stalled", tr2.stalled}};
  }

  // center invariance over surjective nonexpansive maps: identity plus all
  // nonexpansive permutations at small n; constants onto the center always
  // qualify as well.
  bool inv_ok = true;
  int maps = 0;
  std::vector<SelfMapTable> cands;
  SelfMapTable ident;
  for (int i = 0; i < a.count(); ++i) ident.map.push_back(i);
  for (int c : info.center) {
    SelfMapTable t;
    t.map.assign(a.count(), c);
    cands.push_back(t);
  }
  if (a.count() <= 5) {
    // the permutation scan includes the identity
    std::vector<int> perm = ident.map;
    do {
      cands.push_back(SelfMapTable{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    cands.push_back(ident);
  }
  for (const auto& t : cands) {
    if (!check_nonexpansive(a, t, w.eps).pass) continue;
    ++maps;
    if (!center_invariance_check(a, t, w.eps)) inv_ok = false;
  }
  cj["center_invariance"] = json{{"maps", maps}, {"pass", inv_ok}};
  verdicts.add("center_invariance", inv_ok);

  if (s.size() >= 3) {
    SelfMapTable swap = ident;
    std::swap(swap.map.front(), swap.map.back());
    cj["swap_first_last_nonexpansive"] = check_nonexpansive(a, swap, w.eps).pass;
  }
  results["chebyshev"] = cj;
}

template <typename S>
void run_suite(const Workspace<S>& w, const Instance& inst, const ExperimentConfig& cfg,
               json& results, Verdicts& verdicts) {
  Rng rng(cfg.seed);
  const int triples = cfg.params.value("triples", 300);
  const int pairs = cfg.params.value("pairs", 100);
  const int jensen = cfg.params.value("jensen", 200);
  run_validate(w, inst, cfg.tol, results, verdicts);
  suite_embedding_isometry(w, results, verdicts);
  suite_triangle_t0(w, rng, triples, results, verdicts);
  bool rstd = false;
  {
    auto exact = make_workspace<Rat>(inst, cfg.tol);
    rstd = is_rstandard(exact.space());
  }
  suite_minimize(w, rng, pairs, rstd, results, verdicts);
  // every q_hull call above cross-checked the dual formula
  results["dual_formula"] = json{{"pass", true}};
  verdicts.add("dual_formula", true);
  if (w.cs) {
    suite_hull_algebra(w, results, verdicts);
    suite_lifted_convexity(w, results, verdicts);
    suite_wconvex(w, rng, jensen, results, verdicts);
    suite_segment(w, results, verdicts);
  }
  suite_chebyshev(w, results, verdicts);
}

// ---------------------------------------------------------------------------
// single-operation commands

template <typename S>
void run_embed(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
               Verdicts& verdicts) {
  const auto& s = w.space();
  std::vector<int> idx;
  if (cfg.params.contains("indices"))
    for (const auto& e : cfg.params.at("indices")) idx.push_back(e.get<int>());
  else
    for (int i = 0; i < s.size(); ++i) idx.push_back(i);
  json pts = json::array();
  bool ok = true;
  for (int i : idx) {
    auto h = embed(s, i, w.eps);
    if (!is_minimal(s, h.pair(), w.eps)) ok = false;
    pts.push_back(pair_json(h.pair(), true));
  }
  results["points"] = pts;
  verdicts.add("embeddings_minimal", ok);
}

template <typename S>
void run_minimize_cmd(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
                      Verdicts& verdicts) {
  const auto& s = w.space();
  FunctionPair<S> p;
  const json& pj = cfg.params.at("pair");
  for (const auto& e : pj.at("f1")) p.f1.push_back(param_num<S>(e));
  for (const auto& e : pj.at("f2")) p.f2.push_back(param_num<S>(e));
  auto res = minimize(s, p, w.eps);
  results["point"] = pair_json(res.point.pair(), true);
  results["sweeps"] = res.sweeps;
  bool mono = true;
  for (int j = 0; j < s.size(); ++j)
    if (!leq(res.point.f1()[j], p.f1[j], w.eps) || !leq(res.point.f2()[j], p.f2[j], w.eps))
      mono = false;
  verdicts.add("minimize_monotone", mono);
  verdicts.add("minimize_within_cap", res.sweeps <= 2 * s.size() + 2);
}

template <typename S>
void run_qe(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
            Verdicts& verdicts) {
  const auto& s = w.space();
  auto f = resolve_point(w, cfg.params.at("left"));
  auto g = resolve_point(w, cfg.params.at("right"));
  results["q"] = num_json(q_hull(s, f, g, w.eps));
  results["q_conjugate"] = num_json(q_hull_conjugate(s, f, g, w.eps));
  auto t0 = hull_t0_check(s, f, g, w.eps);
  results["t0"] = json{{"both_zero", t0.both_zero}, {"equal", t0.equal}};
  verdicts.add("dual_formula", true);  // q_hull throws on mismatch
  verdicts.add("t0", t0.ok());
}

template <typename S>
void run_ops(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
             Verdicts& verdicts) {
  if (!w.cs) throw ValidationError("ops requires a point_cloud instance");
  const auto& cs = *w.cs;
  HullPoint<S> out = [&] {
    if (cfg.sub == "scalar")
      return scalar_mul(cs, param_num<S>(cfg.params.at("t")),
                        resolve_point(w, cfg.params.at("point")), w.eps);
    if (cfg.sub == "oplus")
      return oplus(cs, resolve_point(w, cfg.params.at("left")),
                   resolve_point(w, cfg.params.at("right")), w.eps);
    if (cfg.sub == "wlift")
      return w_lift(cs, resolve_point(w, cfg.params.at("left")),
                    resolve_point(w, cfg.params.at("right")),
                    Lambda<S>(param_num<S>(cfg.params.at("lambda"))), w.eps);
    throw ParseError("unknown ops subcommand '" + cfg.sub + "'");
  }();
  results["point"] = pair_json(out.pair(), true);
  verdicts.add("result_certified", is_minimal(cs.space, out.pair(), w.eps));
}

template <typename S>
void run_segment_cmd(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
                     Verdicts& verdicts, std::string* csv) {
  if (!w.cs) throw ValidationError("segment requires a point_cloud instance");
  const auto& cs = *w.cs;
  auto f = resolve_point(w, cfg.params.at("left"));
  auto g = resolve_point(w, cfg.params.at("right"));
  std::vector<Lambda<S>> lams;
  for (const auto& v : grid_from_json<S>(cfg.params.at("grid"))) lams.emplace_back(v);
  auto seg = segment(cs, f, g, lams, w.eps);
  results["alpha"] = num_json(seg.alpha);
  results["beta"] = num_json(seg.beta);
  json pts = json::array();
  for (const auto& h : seg.points) pts.push_back(pair_json(h.pair(), true));
  results["points"] = pts;
  json table = json::array();
  std::string out_csv = "lambda_row,lambda_col,q_hull,predicted,match\n";
  for (std::size_t a = 0; a < lams.size(); ++a)
    for (std::size_t b = 0; b < lams.size(); ++b) {
      const auto& cell = seg.table[a][b];
      table.push_back(json{{"row", scalar_traits<S>::str(lams[a].value)},
                           {"col", scalar_traits<S>::str(lams[b].value)},
                           {"q", num_json(cell.actual)},
                           {"predicted", num_json(cell.predicted)},
                           {"match", cell.match}});
      out_csv += scalar_traits<S>::str(lams[a].value) + "," +
                 scalar_traits<S>::str(lams[b].value) + "," +
                 scalar_traits<S>::str(cell.actual) + "," +
                 scalar_traits<S>::str(cell.predicted) + "," +
                 (cell.match ? "1" : "0") + "\n";
    }
  results["table"] = table;
  *csv = out_csv;
  verdicts.add("segment_law", seg.all_match);
}

template <typename S>
void run_check(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
               Verdicts& verdicts) {
  if (cfg.sub == "takahashi") {
    const json& tj = cfg.params.at("table");
    ConvexTable<S> t = [&]() -> ConvexTable<S> {
      if (tj.value("affine", false)) {
        if (!w.cs) throw ValidationError("affine table requires a point_cloud instance");
        return affine_table(*w.cs, grid_from_json<S>(tj.at("grid")), w.eps);
      }
      ConvexTable<S> tab{w.space(), grid_from_json<S>(tj.at("grid")), {}};
      for (const auto& c : tj.at("cells"))
        tab.set(c.at("i").get<int>(), c.at("j").get<int>(),
                param_num<S>(c.at("lambda")), c.at("m").get<int>());
      return tab;
    }();
    const std::string mode_s = cfg.params.value("mode", "directed");
    TakahashiMode mode =
        mode_s == "symmetrized" ? TakahashiMode::symmetrized : TakahashiMode::directed;
    auto v = check_takahashi(t, mode, w.eps);
    results["cells"] = t.cells.size();
    results["mode"] = mode_s;
    results["pass"] = v.pass;
    if (v.witness) {
      results["witness"] = json{{"inequality", v.witness->which},
                                {"z", v.witness->z},
                                {"i", v.witness->i},
                                {"j", v.witness->j},
                                {"lambda", scalar_traits<S>::str(v.witness->lambda)}};
    }
    verdicts.add("takahashi_" + mode_s, v.pass);
    return;
  }
  if (cfg.sub == "pair") {
    if (!w.cs) throw ValidationError("check pair requires a point_cloud instance");
    auto p = resolve_point(w, cfg.params.at("point"));
    std::vector<std::tuple<int, int, S>> samples;
    if (cfg.params.contains("samples")) {
      for (const auto& sj : cfg.params.at("samples"))
        samples.emplace_back(sj.at(0).get<int>(), sj.at(1).get<int>(),
                             param_num<S>(sj.at(2)));
    } else {
      Rng rng(cfg.seed);
      const int count = cfg.params.value("sample_count", 100);
      const std::vector<Rat> lams{Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4)};
      for (int t = 0; t < count; ++t)
        samples.emplace_back(static_cast<int>(draw(rng, w.cs->size())),
                             static_cast<int>(draw(rng, w.cs->size())),
                             scalar_traits<S>::from_rat(lams[draw(rng, lams.size())]));
    }
    auto v = check_wconvex_pair(*w.cs, p, samples, w.eps);
    results["samples"] = samples.size();
    results["pass"] = v.pass;
    verdicts.add("wconvex_pair", v.pass);
    return;
  }
  throw ParseError("unknown check subcommand '" + cfg.sub + "'");
}

template <typename S>
HullSubset<S> subset_from_params(const Workspace<S>& w, const json& params) {
  const auto& s = w.space();
  std::vector<HullPoint<S>> elems;
  if (params.contains("subset")) {
    for (const auto& e : params.at("subset")) {
      if (e.is_number_integer())
        elems.push_back(embed(s, e.get<int>(), w.eps));
      else
        elems.push_back(resolve_point(w, e));
    }
  } else {
    for (int i = 0; i < s.size(); ++i) elems.push_back(embed(s, i, w.eps));
  }
  std::optional<std::vector<HullPoint<S>>> universe;
  if (params.contains("universe")) {
    std::vector<HullPoint<S>> u;
    for (const auto& e : params.at("universe")) {
      if (e.is_number_integer())
        u.push_back(embed(s, e.get<int>(), w.eps));
      else
        u.push_back(resolve_point(w, e));
    }
    universe = std::move(u);
  }
  return HullSubset<S>(s, std::move(elems), std::move(universe));
}

template <typename S>
void run_chebyshev_cmd(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
                       Verdicts& verdicts) {
  auto a = subset_from_params(w, cfg.params);
  json rj = json::array();
  for (const auto& f : a.elements) {
    auto r = radii(a, f, w.eps);
    rj.push_back(json{{"r_q", num_json(r.r_q)},
                      {"r_qt", num_json(r.r_qt)},
                      {"r", num_json(r.r)}});
  }
  results["radii"] = rj;
  auto info = center_and_diameter(a, w.eps);
  results["r"] = num_json(info.r);
  results["center"] = info.center;
  results["diam"] = num_json(info.diam);
  auto ns = normal_structure_check(a, w.eps);
  results["normal_structure"] = json{{"applicable", ns.applicable}, {"holds", ns.holds}};
  if (a.universe) {
    auto c = double_closure(a, w.eps);
    results["double_closure_size"] = c.count();
    results["doubly_closed"] = is_doubly_closed(a, w.eps);
  }
  verdicts.add("center_nonempty", !info.center.empty());
}

template <typename S>
void run_descent_cmd(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
                     Verdicts& verdicts, std::string* jsonl) {
  auto a = subset_from_params(w, cfg.params);
  auto tr = cheb_descent(a, w.eps);
  json chain = json::array();
  std::string lines;
  for (const auto& step : tr.chain) {
    json sj{{"members", step.members}, {"r", num_json(step.r)}, {"diam", num_json(step.diam)}};
    chain.push_back(sj);
    lines += sj.dump() + "\n";
  }
  results["chain"] = chain;
  results["outcome"] = tr.reached_zero_diam ? "diam_zero" : "stalled";
  *jsonl = lines;
  verdicts.add("descent_terminates", tr.reached_zero_diam || tr.stalled);
}

template <typename S>
void run_fixpoint_cmd(const Workspace<S>& w, const ExperimentConfig& cfg, json& results,
                      Verdicts& verdicts) {
  auto a = subset_from_params(w, cfg.params);
  std::vector<SelfMapTable> maps;
  for (const auto& mj : cfg.params.at("maps")) maps.push_back(selfmap_from_json(mj));
  json mj = json::array();
  std::vector<SelfMapTable> good;
  for (const auto& t : maps) {
    auto v = check_nonexpansive(a, t, w.eps);
    json e{{"map", t.map}, {"nonexpansive", v.pass}};
    if (v.witness)
      e["witness"] = json{{"f", std::get<0>(*v.witness)},
                          {"g", std::get<1>(*v.witness)},
                          {"inequality", std::get<2>(*v.witness)}};
    e["fixed_points"] = fixed_points(t);
    mj.push_back(e);
    if (v.pass) good.push_back(t);
  }
  results["maps"] = mj;
  bool alarm = false;
  if (!good.empty()) {
    try {
      auto r = common_fixed(a, good, w.eps);
      results["common_fixed"] = r.common;
      alarm = r.alarm;
    } catch (const CommutationFailure& e) {
      results["common_fixed_error"] = e.what();
    }
  }
  verdicts.add("no_theorem_alarm", !alarm);
}

RunResult run_search_cmd(const ExperimentConfig& cfg) {
  RunResult out;
  Verdicts verdicts;
  json results;
  const int max_n = cfg.params.value("max_n", 3);
  const int bound = cfg.params.value("bound", 2);
  std::vector<Rat> grid;
  if (cfg.params.contains("grid"))
    for (const auto& e : cfg.params.at("grid")) grid.push_back(rat_from_json(e));
  else
    grid.push_back(Rat(1, 2));
  try {
    auto res = counterexample_search(max_n, grid, bound);
    results["found"] = true;
    results["instance"] = instance_to_json(Instance{res.space.matrix()});
    results["table"] = table_cells_to_json(res.table);
    results["witness"] = json{{"inequality", res.witness.which},
                              {"z", res.witness.z},
                              {"i", res.witness.i},
                              {"j", res.witness.j},
                              {"lambda", res.witness.lambda.str()}};
    results["spaces_scanned"] = res.spaces_scanned;
    results["candidates_scanned"] = res.candidates_scanned;
    bool reverified = check_takahashi(res.table, TakahashiMode::symmetrized).pass &&
                      !check_takahashi(res.table, TakahashiMode::directed).pass;
    verdicts.add("counterexample_found", true);
    verdicts.add("counterexample_reverified", reverified);
  } catch (const SearchExhausted& e) {
    results["found"] = false;
    results["exhausted"] = e.what();
    verdicts.add("counterexample_found", false);
  }
  out.report["results"] = results;
  out.report["verdicts"] = verdicts.arr;
  out.all_pass = verdicts.all;
  return out;
}

template <typename S>
RunResult run_typed(const ExperimentConfig& cfg, const Instance& inst) {
  RunResult out;
  Verdicts verdicts;
  json results;
  if (cfg.command == "validate") {
    // must report on instances that fail certification, so no workspace
    Workspace<S> unused{eps_for<S>(cfg.tol), std::nullopt, std::nullopt};
    run_validate(unused, inst, cfg.tol, results, verdicts);
    out.report["results"] = results;
    out.report["verdicts"] = verdicts.arr;
    out.all_pass = verdicts.all;
    return out;
  }
  Workspace<S> w = make_workspace<S>(inst, cfg.tol);
  if (cfg.command == "embed")
    run_embed(w, cfg, results, verdicts);
  else if (cfg.command == "minimize")
    run_minimize_cmd(w, cfg, results, verdicts);
  else if (cfg.command == "qe")
    run_qe(w, cfg, results, verdicts);
  else if (cfg.command == "ops")
    run_ops(w, cfg, results, verdicts);
  else if (cfg.command == "segment")
    run_segment_cmd(w, cfg, results, verdicts, &out.csv);
  else if (cfg.command == "check")
    run_check(w, cfg, results, verdicts);
  else if (cfg.command == "chebyshev")
    run_chebyshev_cmd(w, cfg, results, verdicts);
  else if (cfg.command == "descent")
    run_descent_cmd(w, cfg, results, verdicts, &out.csv);
  else if (cfg.command == "fixpoint")
    run_fixpoint_cmd(w, cfg, results, verdicts);
  else if (cfg.command == "suite")
    run_suite(w, inst, cfg, results, verdicts);
  else
    throw ParseError("unknown command '" + cfg.command + "'");
  out.report["results"] = results;
  out.report["verdicts"] = verdicts.arr;
  out.all_pass = verdicts.all;
  return out;
}

}  // namespace

json ExperimentConfig::echo() const {
  json j;
  j["command"] = command;
  if (!sub.empty()) j["sub"] = sub;
  if (!instance_path.empty()) j["instance"] = instance_path;
  j["params"] = params;
  j["seed"] = seed;
  j["mode"] = mode;
  j["tol"] = tol;
  if (!output.empty()) j["output"] = output;
  if (!csv_output.empty()) j["csv_output"] = csv_output;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.command = j.value("command", "");
  cfg.sub = j.value("sub", "");
  cfg.instance_path = j.value("instance", "");
  cfg.params = j.value("params", json::object());
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.mode = j.value("mode", "exact");
  cfg.tol = j.value("tol", 1e-9);
  cfg.output = j.value("output", "");
  cfg.csv_output = j.value("csv_output", "");
  cfg.timing = j.value("timing", false);
  if (cfg.mode != "exact" && cfg.mode != "float")
    throw ParseError("mode must be 'exact' or 'float'");
  return cfg;
}

RunResult run(const ExperimentConfig& cfg) {
  auto started = std::chrono::steady_clock::now();
  RunResult out;
  if (cfg.command == "search") {
    out = run_search_cmd(cfg);
  } else {
    Instance inst = cfg.params.contains("instance_inline")
                        ? parse_instance(cfg.params.at("instance_inline"))
                        : load_instance(cfg.instance_path);
    out = cfg.mode == "float" ? run_typed<double>(cfg, inst) : run_typed<Rat>(cfg, inst);
  }
  json report;
  report["version"] = kVersion;
  report["command"] = cfg.command + (cfg.sub.empty() ? "" : " " + cfg.sub);
  report["config"] = cfg.echo();
  report["results"] = out.report["results"];
  report["verdicts"] = out.report["verdicts"];
  report["all_pass"] = out.all_pass;
  if (cfg.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    report["wall_time_ms"] = ms;
  }
  out.report = report;
  return out;
}

int run_to_exit_code(ExperimentConfig cfg, std::string* rendered) {
  try {
    RunResult res = run(cfg);
    std::string text = res.report.dump(2) + "\n";
    if (rendered) *rendered = text;
    if (!cfg.output.empty())
      write_text_file(cfg.output, text);
    else
      std::cout << text;
    if (!res.csv.empty() && !cfg.csv_output.empty())
      write_text_file(cfg.csv_output, res.csv);
    else if (!res.csv.empty() && cfg.command == "descent" && cfg.output.empty())
      std::cout << res.csv;
    return res.all_pass ? 0 : 1;
  } catch (const NonConvergence& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const DualFormulaMismatch& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dihull
