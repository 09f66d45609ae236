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

#include "dihull/io.hpp"

#include <fstream>
#include <sstream>

namespace dihull {

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

json rat_to_json(const Rat& r) { return json(r.str()); }

namespace {

std::vector<Rat> rat_vector(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_to_json(r));
  return a;
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("instance must be an object with a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "matrix") {
    if (!j.contains("q") || !j.at("q").is_array())
      throw ParseError("matrix instance needs a 'q' array");
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j.at("q")) rows.push_back(rat_vector(row));
    return Instance{SquareMatrix<Rat>(rows)};
  }
  if (kind == "point_cloud") {
    PointCloud<Rat> pc;
    pc.gauge.dim = j.at("dim").get<int>();
    for (const auto& f : j.at("functionals")) {
      auto v = rat_vector(f);
      if (static_cast<int>(v.size()) != pc.gauge.dim)
        throw ParseError("functional has wrong dimension");
      pc.gauge.functionals.push_back(std::move(v));
    }
    for (const auto& p : j.at("points")) {
      auto v = rat_vector(p);
      if (static_cast<int>(v.size()) != pc.gauge.dim)
        throw ParseError("point has wrong dimension");
      pc.points.push_back(std::move(v));
    }
    if (pc.gauge.functionals.empty()) throw ParseError("point cloud needs functionals");
    if (pc.points.empty()) throw ParseError("point cloud needs points");
    return Instance{std::move(pc)};
  }
  throw ParseError("unknown instance kind '" + kind + "'");
}

json instance_to_json(const Instance& inst) {
  json j;
  if (!inst.is_cloud()) {
    j["kind"] = "matrix";
    json rows = json::array();
    const auto& m = inst.matrix();
    for (int i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (int k = 0; k < m.size(); ++k) row.push_back(rat_to_json(m.at(i, k)));
      rows.push_back(row);
    }
    j["q"] = rows;
  } else {
    const auto& pc = inst.cloud();
    j["kind"] = "point_cloud";
    j["dim"] = pc.gauge.dim;
    json fns = json::array();
    for (const auto& f : pc.gauge.functionals) fns.push_back(rat_vector_to_json(f));
    j["functionals"] = fns;
    json pts = json::array();
    for (const auto& p : pc.points) pts.push_back(rat_vector_to_json(p));
    j["points"] = pts;
  }
  return j;
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_json_file(path));
}

json pair_to_json(const FunctionPair<Rat>& p, bool minimal) {
  json j;
  j["f1"] = rat_vector_to_json(p.f1);
  j["f2"] = rat_vector_to_json(p.f2);
  j["minimal"] = minimal;
  return j;
}

json hullpoint_to_json(const HullPoint<Rat>& h) { return pair_to_json(h.pair(), true); }

FunctionPair<Rat> pair_from_json(const json& j) {
  FunctionPair<Rat> p;
  p.f1 = rat_vector(j.at("f1"));
  p.f2 = rat_vector(j.at("f2"));
  return p;
}

SelfMapTable selfmap_from_json(const json& j) {
  SelfMapTable t;
  for (const auto& e : j.at("map")) t.map.push_back(e.get<int>());
  return t;
}

json selfmap_to_json(const SelfMapTable& t) {
  json j;
  j["map"] = t.map;
  return j;
}

json table_cells_to_json(const ConvexTable<Rat>& t) {
  json j;
  json grid = json::array();
  for (const auto& l : t.grid) grid.push_back(rat_to_json(l));
  j["grid"] = grid;
  json cells = json::array();
  for (const auto& [key, m] : t.cells) {
    const auto& [i, jj, lam] = key;
    json c;
    c["i"] = i;
    c["j"] = jj;
    c["lambda"] = rat_to_json(lam);
    c["m"] = m;
    cells.push_back(c);
  }
  j["cells"] = cells;
  return j;
}

SquareMatrix<double> matrix_to_double(const SquareMatrix<Rat>& m) {
  SquareMatrix<double> d(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d.at(i, j) = m.at(i, j).to_double();
  return d;
}

PointCloud<double> cloud_to_double(const PointCloud<Rat>& pc) {
  PointCloud<double> d;
  d.gauge.dim = pc.gauge.dim;
  for (const auto& f : pc.gauge.functionals) {
    std::vector<double> v;
    v.reserve(f.size());
    for (const auto& r : f) v.push_back(r.to_double());
    d.gauge.functionals.push_back(std::move(v));
  }
  for (const auto& p : pc.points) {
    std::vector<double> v;
    v.reserve(p.size());
    for (const auto& r : p) v.push_back(r.to_double());
    d.points.push_back(std::move(v));
  }
  return d;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + std::string(e.what()));
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace dihull
