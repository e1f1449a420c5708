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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockade/config.hpp"
#include "blockade/liouville.hpp"
#include "blockade/observables.hpp"

namespace blockade {

/// Tabular sweep output. Columns are the swept parameters, the requested
/// observables and the steady-state residual; `status` is kept separately.
/// Missing values (undefined correlations, failed points) are nullopt.
struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> status;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t column_index(const std::string& name) const;
  std::optional<double> value(std::size_t row, const std::string& column) const;
  std::vector<std::optional<double>> column(const std::string& name) const;
};

inline constexpr const char* kStatusOk = "ok";

/// Steady state plus observables of one parameter point.
struct PointOutcome {
  std::string status = kStatusOk;  // ok, undefined_correlation or an error kind
  std::string message;
  double residual = 0.0;
  std::optional<CorrelationReport> report;

  std::optional<double> observable(const std::string& name) const;
};

PointOutcome evaluate_point(const ModelParams& p, int cutoff,
                            const SteadyStateOptions& opts = {});

/// Run every grid point; failures are recorded per row and never abort the
/// sweep unless every point fails. Points that differ only in phi share one
/// steady-state solve. Rows come out in grid order regardless of threading.
SweepResult run_sweep(const SweepSpec& spec);

struct MinimumReport {
  double x = 0.0;
  double value = 0.0;
  std::optional<double> g2_1;  // cavity-1 g2 at the same point
};

/// Brent refinement of `observable` along the single sweep axis on
/// [lo, hi], minimizing log10 of the observable.
MinimumReport refine_minimum(const SweepSpec& spec, const std::string& observable,
                             double lo, double hi);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double std_error = 0.0;
  int points = 0;
};

/// Least-squares slope of log10(y) against log10(x) over rows where both are
/// present and positive (optionally restricted to x in [x_min, x_max]).
/// Fewer than four usable rows raise a fit error.
SlopeFit fit_slope(const SweepResult& result, const std::string& x, const std::string& y,
                   std::optional<double> x_min = std::nullopt,
                   std::optional<double> x_max = std::nullopt);

struct ConvergenceReport {
  int cutoff = 0;
  int sampled_points = 0;
  double threshold = 1e-3;
  std::vector<std::pair<std::string, double>> max_relative_change;
  bool converged = true;

  nlohmann::json to_json() const;
};

/// Re-run up to `samples` evenly spaced grid points at cutoff + 1 and compare
/// every observable.
ConvergenceReport convergence_check(const SweepSpec& spec, int samples = 5,
                                    double threshold = 1e-3);

}  // namespace blockade
