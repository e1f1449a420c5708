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

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockade/model.hpp"

namespace blockade {

enum class AxisScale { Linear, Log };

struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  AxisScale scale = AxisScale::Linear;

  std::vector<double> values() const;
};

/// target = scale * source + offset, applied after the axes are assigned.
struct Link {
  std::string target;
  std::string source;
  double scale = 1.0;
  double offset = 0.0;
};

inline const std::vector<std::string>& observable_names() {
  static const std::vector<std::string> names{"n1",   "n2",   "n_out",
                                              "g2_1", "g2_2", "g2_out"};
  return names;
}

/// One sweep run: a model, its fixed parameters, up to two swept axes and
/// the derived (linked) parameters.
///
/// Parameter names. Kerr: delta1, delta2, delta (= delta2 - delta1; at most
/// one of delta/delta2), U, eps, kappa1, kappa2, phi. JC: delta1, delta_a
/// (defaults to delta1), delta2, g, eps, kappa1, kappa2, kappa_a, phi.
/// Unset parameters take the KerrParams / JCParams defaults. phi is in
/// radians.
struct SweepSpec {
  ModelKind model = ModelKind::Kerr;
  std::map<std::string, double> params;
  std::vector<Link> links;
  std::vector<Axis> axes;
  int cutoff = 5;
  std::vector<std::string> outputs = observable_names();
  double residual_tol = 1e-10;
  int threads = 0;  // 0: hardware concurrency
  /// Observable whose minimum along a single axis is refined after the grid
  /// run (empty: none).
  std::string refine_minimum;
  std::string output;  // CSV path; empty writes to stdout

  void validate() const;
  std::size_t grid_size() const;
  /// Axis values of grid point `index`; the first axis varies slowest.
  std::vector<double> grid_point(std::size_t index) const;
  /// Model parameters with the given axis values and links applied.
  ModelParams resolve(const std::vector<double>& axis_values) const;
};

const std::vector<std::string>& parameter_names(ModelKind model);
std::string to_string(ModelKind model);
ModelKind parse_model(const std::string& name);

/// Build a spec from a JSON config. Errors raise invalid-config.
SweepSpec parse_sweep_spec(const nlohmann::json& config);
SweepSpec load_sweep_spec(const std::string& path);
nlohmann::json to_json(const SweepSpec& spec);

}  // namespace blockade
