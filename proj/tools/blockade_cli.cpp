// Copyright 2026 The Blockade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: sweeps, figure recipes, scaling tables,
// convergence checks and log-log slope fits.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockade/config.hpp"
#include "blockade/csv.hpp"
#include "blockade/errors.hpp"
#include "blockade/liouville.hpp"
#include "blockade/recipes.hpp"
#include "blockade/sweep.hpp"
#include "blockade/weakdrive.hpp"

namespace fs = std::filesystem;
using namespace blockade;

namespace {

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

fs::path metadata_path(const fs::path& csv) {
  fs::path meta = csv;
  meta.replace_extension(".meta.json");
  return meta;
}

void emit(const SweepResult& result, const std::string& output) {
  if (output.empty()) {
    write_csv(std::cout, result);
    std::cerr << result.metadata.dump() << '\n';
    return;
  }
  write_csv(output, result);
  write_json(metadata_path(output), result.metadata);
}

int cmd_sweep(const std::string& config, const std::string& out) {
  SweepSpec spec = load_sweep_spec(config);
  if (!out.empty()) spec.output = out;
  emit(run_sweep(spec), spec.output);
  return 0;
}

int cmd_fig(const std::string& name, const std::string& dir, int threads) {
  const FigureRecipe recipe = figure_recipe(name);
  fs::create_directories(dir);
  for (auto [panel, spec] : recipe.panels) {
    if (threads > 0) spec.threads = threads;
    const fs::path csv = fs::path(dir) / (recipe.name + "_" + panel + ".csv");
    emit(run_sweep(spec), csv.string());
    std::cout << csv.string() << '\n';
  }
  return 0;
}

int cmd_scaling(const std::string& model_name, double lo, double hi, int points,
                bool numeric, int cutoff, double eps) {
  const ModelKind model = parse_model(model_name);
  if (!(lo > 0.0 && hi > lo) || points < 2) {
    fail(ErrorKind::InvalidArgument, "scaling needs 0 < min < max and at least 2 points");
  }
  std::cout << "strength,g2_out_pred,g2_1_pred,extrapolated";
  if (numeric) std::cout << ",g2_out,g2_1";
  std::cout << '\n';
  for (int i = 0; i < points; ++i) {
    const double s = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1));
    const ScalingPrediction pred = scaling_prediction(model, s);
    std::cout << format_number(s) << ',' << format_number(pred.g2_out) << ','
              << format_number(pred.g2_1) << ',' << (pred.extrapolated ? "true" : "false");
    if (numeric) {
      const ModelParams p = model == ModelKind::Kerr ? ModelParams(kerr_optimal_params(s, eps))
                                                     : ModelParams(jc_optimal_params(s, eps));
      const PointOutcome o = evaluate_point(p, cutoff);
      for (const char* name : {"g2_out", "g2_1"}) {
        const auto v = o.observable(name);
        std::cout << ',' << (v ? format_number(*v) : kUndefinedMarker);
      }
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_check(const std::string& config, int samples) {
  const SweepSpec spec = load_sweep_spec(config);
  std::cout << convergence_check(spec, samples).to_json().dump(2) << '\n';
  return 0;
}

int cmd_slope(const std::string& csv, const std::string& x, const std::string& y,
              std::optional<double> x_min, std::optional<double> x_max) {
  const SlopeFit fit = fit_slope(read_csv(csv), x, y, x_min, x_max);
  nlohmann::json j{{"x", x},
                   {"y", y},
                   {"slope", fit.slope},
                   {"std_error", fit.std_error},
                   {"intercept", fit.intercept},
                   {"points", fit.points}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-blockade steady states, output-field correlations and scaling laws"};
  app.require_subcommand(1);

  std::string config, out, fig_name, fig_dir = ".", model, csv, xcol, ycol;
  int threads = 0, points = 11, cutoff = 4, samples = 5;
  double lo = 10.0, hi = 100.0, eps = 0.1;
  bool numeric = false;
  std::optional<double> x_min, x_max;

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
  sweep->add_option("config", config, "Sweep config (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "CSV output path (overrides the config)");

  auto* fig = app.add_subcommand("fig", "Run the sweeps behind a figure");
  fig->add_option("name", fig_name, "fig1, fig2, fig3 or fig4")->required();
  fig->add_option("--out", fig_dir, "Output directory");
  fig->add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* scaling = app.add_subcommand("scaling", "Tabulate the scaling laws at the optimal point");
  scaling->add_option("model", model, "kerr or jc")->required();
  scaling->add_option("--min", lo, "Smallest strength (units of kappa)");
  scaling->add_option("--max", hi, "Largest strength (units of kappa)");
  scaling->add_option("--points", points, "Log-spaced points");
  scaling->add_flag("--numeric", numeric, "Also solve the master equation at each point");
  scaling->add_option("--cutoff", cutoff, "Fock cutoff for --numeric");
  scaling->add_option("--eps", eps, "Drive amplitude for --numeric");

  auto* check = app.add_subcommand("check", "Fock-cutoff convergence check for a sweep config");
  check->add_option("config", config, "Sweep config (JSON)")->required()->check(CLI::ExistingFile);
  check->add_option("--samples", samples, "Grid points to re-run at cutoff + 1");

  auto* slope = app.add_subcommand("slope", "Log-log slope between two CSV columns");
  slope->add_option("csv", csv, "Sweep result CSV")->required()->check(CLI::ExistingFile);
  slope->add_option("--x", xcol, "Abscissa column")->required();
  slope->add_option("--y", ycol, "Ordinate column")->required();
  slope->add_option("--xmin", x_min, "Lower bound on x");
  slope->add_option("--xmax", x_max, "Upper bound on x");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*sweep) return cmd_sweep(config, out);
    if (*fig) return cmd_fig(fig_name, fig_dir, threads);
    if (*scaling) return cmd_scaling(model, lo, hi, points, numeric, cutoff, eps);
    if (*check) return cmd_check(config, samples);
    if (*slope) return cmd_slope(csv, xcol, ycol, x_min, x_max);
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump()
              << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return 3;
  }
  return 1;
}
