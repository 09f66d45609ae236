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
#include <variant>

#include <json.hpp>

#include "dihull/chebyshev.hpp"
#include "dihull/convexity.hpp"
#include "dihull/hull.hpp"
#include "dihull/qspace.hpp"

namespace dihull {

// Reports and instances keep insertion order so emitted files diff cleanly.
using json = nlohmann::ordered_json;

// An instance is either a raw distance matrix or an asymmetrically normed
// point cloud:
//   {"kind":"matrix","q":[["0","1"],["0","0"]]}
//   {"kind":"point_cloud","dim":2,"functionals":[["1","0"],...],"points":[...]}
// Rationals travel as "p/q" strings.
struct Instance {
  std::variant<SquareMatrix<Rat>, PointCloud<Rat>> data;

  bool is_cloud() const { return data.index() == 1; }
  const SquareMatrix<Rat>& matrix() const { return std::get<0>(data); }
  const PointCloud<Rat>& cloud() const { return std::get<1>(data); }
};

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

Instance parse_instance(const json& j);
json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);

json pair_to_json(const FunctionPair<Rat>& p, bool minimal);
json hullpoint_to_json(const HullPoint<Rat>& h);
FunctionPair<Rat> pair_from_json(const json& j);

SelfMapTable selfmap_from_json(const json& j);
json selfmap_to_json(const SelfMapTable& t);

// Convexity tables: {"grid":["1/2"],"cells":[{"i":0,"j":2,"lambda":"1/2","m":1}]}
json table_cells_to_json(const ConvexTable<Rat>& t);

// Float-mode views of exact instances.
SquareMatrix<double> matrix_to_double(const SquareMatrix<Rat>& m);
PointCloud<double> cloud_to_double(const PointCloud<Rat>& pc);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dihull
