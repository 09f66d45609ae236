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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "dihull/harness.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string instance;
  std::string output;
  std::string csv_output;
  std::string mode;
  double tol = -1.0;
  std::int64_t seed = -1;
  bool timing = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "experiment config JSON");
    app->add_option("--instance", instance, "instance JSON path");
    app->add_option("--output", output, "report output path");
    app->add_option("--csv-output", csv_output, "distance table / trace output path");
    app->add_option("--seed", seed, "RNG seed");
    app->add_option("--mode", mode, "arithmetic mode: exact|float");
    app->add_option("--tol", tol, "tolerance for float mode");
    app->add_flag("--timing", timing, "include wall time in the report");
  }

  dihull::ExperimentConfig build(const std::string& command, const std::string& sub) {
    dihull::ExperimentConfig cfg;
    if (!config_path.empty())
      cfg = dihull::ExperimentConfig::from_json(dihull::read_json_file(config_path));
    cfg.command = command;
    if (!sub.empty()) cfg.sub = sub;
    if (!instance.empty()) cfg.instance_path = instance;
    if (!output.empty()) cfg.output = output;
    if (!csv_output.empty()) cfg.csv_output = csv_output;
    if (!mode.empty()) cfg.mode = mode;
    if (tol >= 0) cfg.tol = tol;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (timing) cfg.timing = true;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed injective hulls over finite quasi-metric spaces"};
  app.require_subcommand(1);

  struct Cmd {
    CLI::App* sub;
    CommonArgs args;
    std::string command, subname;
  };
  std::vector<std::unique_ptr<Cmd>> cmds;
  auto add = [&](const std::string& command, const std::string& subname,
                 const std::string& help) {
    auto c = std::make_unique<Cmd>();
    CLI::App* parent = &app;
    if (!subname.empty()) {
      // nested: find or create the parent subcommand
      CLI::App* p = app.get_subcommand_no_throw(command);
      if (p == nullptr) {
        p = app.add_subcommand(command, command + " operations");
        p->require_subcommand(1);
      }
      parent = p;
    }
    c->sub = parent->add_subcommand(subname.empty() ? command : subname, help);
    c->args.attach(c->sub);
    c->command = command;
    c->subname = subname;
    cmds.push_back(std::move(c));
  };

  add("validate", "", "validate an instance against the quasi-metric axioms");
  add("embed", "", "canonical embeddings of base points");
  add("minimize", "", "minimize an ample function pair");
  add("qe", "", "hull quasi-metric between two hull points");
  add("ops", "scalar", "scalar action on a hull point");
  add("ops", "oplus", "sup-convolution of two hull points");
  add("ops", "wlift", "lifted convex combination");
  add("segment", "", "segment with its distance table");
  add("check", "takahashi", "verify a convexity table");
  add("check", "pair", "verify Jensen inequalities for a hull point");
  add("search", "counterexample", "search for a symmetrized-vs-directed gap");
  add("chebyshev", "", "radii, center, diameter, normal structure");
  add("descent", "", "Chebyshev center descent trace");
  add("fixpoint", "", "nonexpansive self-maps and fixed point sets");
  add("suite", "", "full invariant battery on an instance");

  // search-specific knobs
  int max_n = -1, bound = -1;
  for (auto& c : cmds)
    if (c->command == "search") {
      c->sub->add_option("--max-n", max_n, "largest base set size");
      c->sub->add_option("--bound", bound, "largest matrix entry");
    }

  CLI11_PARSE(app, argc, argv);

  for (auto& c : cmds) {
    if (!c->sub->parsed()) continue;
    dihull::ExperimentConfig cfg;
    try {
      cfg = c->args.build(c->command, c->subname);
      if (c->command == "search") {
        if (max_n >= 0) cfg.params["max_n"] = max_n;
        if (bound >= 0) cfg.params["bound"] = bound;
      }
    } catch (const std::exception& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    }
    return dihull::run_to_exit_code(std::move(cfg));
  }
  return 2;
}
