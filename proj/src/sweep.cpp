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

#include "blockade/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <type_traits>

#include <Eigen/QR>
#include <boost/math/tools/minima.hpp>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

struct PhysicsSolve {
  std::string status = kStatusOk;
  std::string message;
  double residual = 0.0;
  std::optional<Moments> moments;
};

OutputMixSpec mix_of(const ModelParams& p) {
  return std::visit([](const auto& q) { return OutputMixSpec(q.phi, q.kappa1, q.kappa2); },
                    p);
}

// Everything that enters the steady state; phi only enters the output mixing.
std::vector<double> physics_key(const ModelParams& p) {
  return std::visit(
      [](const auto& q) -> std::vector<double> {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, KerrParams>) {
          return {0.0, q.delta1, q.delta2, q.U, q.eps, q.kappa1, q.kappa2};
        } else {
          return {1.0,  q.delta1, q.delta_a, q.delta2, q.g,
                  q.eps, q.kappa1, q.kappa2,  q.kappa_a};
        }
      },
      p);
}

PhysicsSolve solve_physics(const ModelParams& p, int cutoff, const SteadyStateOptions& opts) {
  PhysicsSolve out;
  try {
    const SteadyState ss = solve_model(p, cutoff, opts);
    out.residual = ss.residual;
    out.moments = compute_moments(ss.rho, space_for(p, cutoff));
  } catch (const Error& e) {
    out.status = std::string(to_string(e.kind()));
    out.message = e.what();
  }
  return out;
}

PointOutcome outcome_from(const PhysicsSolve& solve, const ModelParams& p) {
  PointOutcome out;
  out.status = solve.status;
  out.message = solve.message;
  out.residual = solve.residual;
  if (!solve.moments) return out;
  try {
    out.report = correlation_report(*solve.moments, mix_of(p));
    if (!out.report->g2_1 || !out.report->g2_2 || !out.report->g2_out) {
      out.status = std::string(to_string(ErrorKind::UndefinedCorrelation));
    }
  } catch (const Error& e) {
    out.status = std::string(to_string(e.kind()));
    out.message = e.what();
    out.report.reset();
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(count, threads > 0 ? static_cast<std::size_t>(threads) : hw);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

double relative_change(std::optional<double> a, std::optional<double> b) {
  if (!a && !b) return 0.0;
  if (!a || !b) return std::numeric_limits<double>::infinity();
  const double scale = std::max(std::abs(*a), std::abs(*b));
  if (scale == 0.0) return 0.0;
  return std::abs(*a - *b) / scale;
}

}  // namespace

std::size_t SweepResult::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) fail(ErrorKind::InvalidArgument, "no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::optional<double> SweepResult::value(std::size_t row, const std::string& column) const {
  return rows.at(row).at(column_index(column));
}

std::vector<std::optional<double>> SweepResult::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<std::optional<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::optional<double> PointOutcome::observable(const std::string& name) const {
  if (!report) return std::nullopt;
  if (name == "n1") return report->n1;
  if (name == "n2") return report->n2;
  if (name == "n_out") return report->n_out;
  if (name == "g2_1") return report->g2_1;
  if (name == "g2_2") return report->g2_2;
  if (name == "g2_out") return report->g2_out;
  fail(ErrorKind::InvalidArgument, "unknown observable '" + name + "'");
}

PointOutcome evaluate_point(const ModelParams& p, int cutoff, const SteadyStateOptions& opts) {
  return outcome_from(solve_physics(p, cutoff, opts), p);
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = spec.grid_size();
  SteadyStateOptions opts;
  opts.residual_tol = spec.residual_tol;

  std::vector<std::vector<double>> axis_values(n);
  std::vector<std::optional<ModelParams>> params(n);
  std::vector<std::string> invalid(n);
  std::map<std::vector<double>, std::size_t> key_slot;
  std::vector<ModelParams> unique;
  std::vector<std::size_t> slot_of(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    axis_values[i] = spec.grid_point(i);
    try {
      ModelParams p = spec.resolve(axis_values[i]);
      std::visit([](const auto& q) { q.validate(); }, p);
      const auto key = physics_key(p);
      auto [it, inserted] = key_slot.emplace(key, unique.size());
      if (inserted) unique.push_back(p);
      slot_of[i] = it->second;
      params[i] = p;
    } catch (const Error& e) {
      invalid[i] = std::string(to_string(e.kind()));
    }
  }

  std::vector<PhysicsSolve> solves(unique.size());
  parallel_for(unique.size(), spec.threads,
               [&](std::size_t k) { solves[k] = solve_physics(unique[k], spec.cutoff, opts); });

  SweepResult result;
  for (const auto& a : spec.axes) result.columns.push_back(a.name);
  for (const auto& o : spec.outputs) result.columns.push_back(o);
  result.columns.push_back("residual");

  std::size_t failed = 0, undefined = 0;
  double max_residual = 0.0;
  nlohmann::json errors = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::optional<double>> row(axis_values[i].begin(), axis_values[i].end());
    PointOutcome out;
    if (!params[i]) {
      out.status = invalid[i];
    } else {
      out = outcome_from(solves[slot_of[i]], *params[i]);
    }
    bool any_undefined = false;
    for (const auto& o : spec.outputs) {
      const auto v = out.observable(o);
      if (out.report && !v) any_undefined = true;
      row.push_back(v);
    }
    if (out.report) {
      row.push_back(out.residual);
      max_residual = std::max(max_residual, out.residual);
      out.status = any_undefined ? std::string(to_string(ErrorKind::UndefinedCorrelation))
                                 : std::string(kStatusOk);
      if (any_undefined) ++undefined;
    } else {
      row.emplace_back();
      ++failed;
      errors.push_back({{"row", i}, {"status", out.status}, {"message", out.message}});
    }
    result.rows.push_back(std::move(row));
    result.status.push_back(out.status);
  }
  if (n > 0 && failed == n) {
    fail(ErrorKind::Sweep, "every sweep point failed (first: " +
                               errors.front().value("message", std::string{}) + ")");
  }

  auto& meta = result.metadata;
  meta["config"] = to_json(spec);
  meta["cutoff"] = spec.cutoff;
  meta["rows"] = n;
  meta["steady_state_solves"] = unique.size();
  meta["failed_points"] = failed;
  meta["undefined_points"] = undefined;
  meta["errors"] = errors;
  meta["tolerances"] = {{"residual", spec.residual_tol},
                        {"hermiticity", DensityMatrix::kHermiticityTol},
                        {"trace", DensityMatrix::kTraceTol},
                        {"positivity", DensityMatrix::kPositivityTol}};
  meta["max_residual"] = max_residual;

  if (!spec.refine_minimum.empty()) {
    const auto col = result.column(spec.refine_minimum);
    const auto xs = spec.axes[0].values();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] && *col[i] > 0.0 && (!best || *col[i] < *col[*best])) best = i;
    }
    if (best) {
      const double lo = xs[*best == 0 ? 0 : *best - 1];
      const double hi = xs[std::min(*best + 1, xs.size() - 1)];
      nlohmann::json m;
      m["observable"] = spec.refine_minimum;
      m["grid_x"] = xs[*best];
      m["grid_value"] = *col[*best];
      try {
        const MinimumReport r = refine_minimum(spec, spec.refine_minimum, lo, hi);
        m["refined_x"] = r.x;
        m["refined_value"] = r.value;
        if (r.g2_1) m["g2_1_at_refined"] = *r.g2_1;
      } catch (const Error& e) {
        m["refine_error"] = e.what();
      }
      meta["minimum"] = m;
    }
  }
  meta["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

MinimumReport refine_minimum(const SweepSpec& spec, const std::string& observable,
                             double lo, double hi) {
  if (spec.axes.size() != 1) fail(ErrorKind::InvalidArgument, "refinement needs one axis");
  if (!(lo < hi)) fail(ErrorKind::InvalidArgument, "refinement bracket is empty");
  SteadyStateOptions opts;
  opts.residual_tol = spec.residual_tol;
  std::map<std::vector<double>, PhysicsSolve> cache;
  const auto outcome_at = [&](double x) {
    const ModelParams p = spec.resolve({x});
    const auto key = physics_key(p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, solve_physics(p, spec.cutoff, opts)).first;
    return outcome_from(it->second, p);
  };
  const auto objective = [&](double x) {
    const auto v = outcome_at(x).observable(observable);
    return v && *v > 0.0 ? std::log10(*v) : std::numeric_limits<double>::max();
  };
  const auto [x, fx] = boost::math::tools::brent_find_minima(objective, lo, hi, 40);
  if (fx == std::numeric_limits<double>::max()) {
    fail(ErrorKind::UndefinedCorrelation, "observable undefined across the bracket");
  }
  const PointOutcome at = outcome_at(x);
  MinimumReport r;
  r.x = x;
  r.value = *at.observable(observable);
  r.g2_1 = at.observable("g2_1");
  return r;
}

SlopeFit fit_slope(const SweepResult& result, const std::string& x, const std::string& y,
                   std::optional<double> x_min, std::optional<double> x_max) {
  const auto xs = result.column(x);
  const auto ys = result.column(y);
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!xs[i] || !ys[i] || !(*xs[i] > 0.0) || !(*ys[i] > 0.0)) continue;
    if (x_min && *xs[i] < *x_min) continue;
    if (x_max && *xs[i] > *x_max) continue;
    lx.push_back(std::log10(*xs[i]));
    ly.push_back(std::log10(*ys[i]));
  }
  const auto m = static_cast<Eigen::Index>(lx.size());
  if (m < 4) {
    fail(ErrorKind::Fit, "slope fit needs at least 4 log-positive points, got " +
                             std::to_string(m));
  }
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    design(i, 0) = lx[i];
    design(i, 1) = 1.0;
    rhs(i) = ly[i];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  const Eigen::VectorXd resid = rhs - design * coef;
  const double mean_x = design.col(0).mean();
  const double sxx = (design.col(0).array() - mean_x).square().sum();
  if (!(sxx > 0.0)) fail(ErrorKind::Fit, "slope fit needs distinct x values");
  SlopeFit fit;
  fit.slope = coef(0);
  fit.intercept = coef(1);
  fit.points = static_cast<int>(m);
  fit.std_error = std::sqrt(resid.squaredNorm() / static_cast<double>(m - 2) / sxx);
  return fit;
}

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["cutoff"] = cutoff;
  j["compared_cutoff"] = cutoff + 1;
  j["sampled_points"] = sampled_points;
  j["threshold"] = threshold;
  j["converged"] = converged;
  nlohmann::json changes = nlohmann::json::object();
  for (const auto& [name, v] : max_relative_change) {
    changes[name] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json("undefined_mismatch");
  }
  j["max_relative_change"] = changes;
  return j;
}

ConvergenceReport convergence_check(const SweepSpec& spec, int samples, double threshold) {
  spec.validate();
  if (samples < 1) fail(ErrorKind::InvalidArgument, "need at least one sample point");
  const std::size_t n = spec.grid_size();
  std::vector<std::size_t> picks;
  if (n <= static_cast<std::size_t>(samples)) {
    for (std::size_t i = 0; i < n; ++i) picks.push_back(i);
  } else {
    for (int s = 0; s < samples; ++s) {
      picks.push_back(static_cast<std::size_t>(
          std::llround(static_cast<double>(s) * static_cast<double>(n - 1) / (samples - 1))));
    }
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  }

  SteadyStateOptions opts;
  opts.residual_tol = spec.residual_tol;
  ConvergenceReport report;
  report.cutoff = spec.cutoff;
  report.threshold = threshold;
  report.sampled_points = static_cast<int>(picks.size());
  std::map<std::string, double> worst;
  for (const auto& name : observable_names()) worst[name] = 0.0;

  for (const std::size_t idx : picks) {
    const ModelParams p = spec.resolve(spec.grid_point(idx));
    const PointOutcome base = evaluate_point(p, spec.cutoff, opts);
    const PointOutcome finer = evaluate_point(p, spec.cutoff + 1, opts);
    for (const auto& name : observable_names()) {
      worst[name] =
          std::max(worst[name], relative_change(base.observable(name), finer.observable(name)));
    }
  }
  for (const auto& name : observable_names()) {
    report.max_relative_change.emplace_back(name, worst[name]);
    if (!(worst[name] < threshold)) report.converged = false;
  }
  return report;
}

}  // namespace blockade
