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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "blockade/config.hpp"
#include "blockade/csv.hpp"
#include "blockade/recipes.hpp"
#include "blockade/sweep.hpp"
#include "test_support.hpp"

using namespace blockade;
using blockade::testing::error_kind;
using nlohmann::json;
using std::numbers::pi;

namespace {

SweepSpec kerr_point(double eps = 0.1, int cutoff = 4) {
  return parse_sweep_spec(json{{"model", "kerr"},
                               {"params", {{"delta1", 0.0}, {"delta", 40.0}, {"eps", eps}}},
                               {"cutoff", cutoff}});
}

std::string csv_text(const SweepResult& r) {
  std::ostringstream out;
  write_csv(out, r);
  return out.str();
}

}  // namespace

TEST_CASE("axis values") {
  Axis lin{"delta1", -1.0, 1.0, 5, AxisScale::Linear};
  const auto v = lin.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == -1.0);
  CHECK(v.back() == 1.0);
  CHECK(v[2] == doctest::Approx(0.0));
  Axis lg{"U", 10.0, 1000.0, 3, AxisScale::Log};
  const auto w = lg.values();
  CHECK(w[1] == doctest::Approx(100.0));
  CHECK(w[2] == doctest::Approx(1000.0));
}

TEST_CASE("config parsing resolves parameters, aliases and links") {
  const SweepSpec s = parse_sweep_spec(json::parse(R"({
    "model": "kerr",
    "params": {"delta1": 1.0, "delta": 5.0, "U": 7.0},
    "axes": [{"name": "phi", "start": 0, "stop": 3.14159, "points": 3}],
    "links": [{"target": "eps", "source": "U", "scale": 0.01}],
    "cutoff": 3
  })"));
  CHECK(s.grid_size() == 3);
  const auto p = std::get<KerrParams>(s.resolve(s.grid_point(2)));
  CHECK(p.delta1 == 1.0);
  CHECK(p.delta2 == doctest::Approx(6.0));
  CHECK(p.U == 7.0);
  CHECK(p.eps == doctest::Approx(0.07));
  CHECK(p.phi == doctest::Approx(3.14159));
  CHECK(p.kappa1 == 1.0);

  const SweepSpec j = parse_sweep_spec(json{{"model", "jc"}, {"params", {{"delta1", -7.0}}}});
  const auto q = std::get<JCParams>(j.resolve({}));
  CHECK(q.delta_a == -7.0);
  CHECK(q.g == 20.0);

  // round trip through JSON
  const SweepSpec again = parse_sweep_spec(to_json(s));
  CHECK(again.grid_size() == s.grid_size());
  CHECK(std::get<KerrParams>(again.resolve(again.grid_point(1))).delta2 ==
        doctest::Approx(p.delta2));
}

TEST_CASE("grid ordering: first axis varies slowest") {
  const SweepSpec s = parse_sweep_spec(json::parse(R"({
    "model": "kerr",
    "axes": [{"name": "delta1", "start": 0, "stop": 1, "points": 2},
             {"name": "phi", "start": 0, "stop": 2, "points": 3}]
  })"));
  CHECK(s.grid_size() == 6);
  CHECK(s.grid_point(1) == std::vector<double>{0.0, 1.0});
  CHECK(s.grid_point(3) == std::vector<double>{1.0, 0.0});
}

TEST_CASE("invalid configurations are rejected") {
  const char* bad[] = {
      R"({"model": "laser"})",
      R"({"model": "kerr", "params": {"chi": 1}})",
      R"({"model": "kerr", "params": {"delta": 1, "delta2": 3}})",
      R"({"model": "kerr", "axes": [{"name": "U", "start": 1, "stop": 2, "points": 1}]})",
      R"({"model": "kerr", "axes": [{"name": "U", "start": 0, "stop": 2, "points": 3, "scale": "log"}]})",
      R"({"model": "kerr", "axes": [{"name": "g", "start": 0, "stop": 2, "points": 3}]})",
      R"({"model": "kerr", "cutoff": 0})",
      R"({"model": "kerr", "outputs": ["g3"]})",
      R"({"model": "kerr", "params": {"kappa1": -1}})",
      R"({"model": "kerr", "links": [{"target": "U", "source": "nope"}]})",
      R"({"params": {}})",
  };
  for (const std::string text : bad) {
    CAPTURE(text);
    CHECK(error_kind([&] { parse_sweep_spec(json::parse(text)); }) == ErrorKind::InvalidConfig);
  }
  CHECK(error_kind([] { load_sweep_spec("/nonexistent/config.json"); }) ==
        ErrorKind::InvalidConfig);
}

TEST_CASE("undriven sweep point reports undefined correlations") {
  const SweepResult r = run_sweep(kerr_point(0.0));
  REQUIRE(r.rows.size() == 1);
  CHECK(*r.value(0, "n1") == 0.0);
  CHECK(*r.value(0, "n2") == 0.0);
  CHECK_FALSE(r.value(0, "g2_1").has_value());
  CHECK_FALSE(r.value(0, "g2_out").has_value());
  CHECK(r.status[0] == "undefined_correlation");
  const std::string text = csv_text(r);
  CHECK(text.find("undefined") != std::string::npos);
  CHECK(text.find("nan") == std::string::npos);
  CHECK(text.find("inf") == std::string::npos);
}

TEST_CASE("sweep results: columns, phase sharing and determinism") {
  SweepSpec s = parse_sweep_spec(json::parse(R"({
    "model": "kerr",
    "params": {"delta": 40},
    "axes": [{"name": "delta1", "start": -1, "stop": 1, "points": 3},
             {"name": "phi", "start": 0, "stop": 6.283185307179586, "points": 4}],
    "cutoff": 3, "threads": 1
  })"));
  const SweepResult a = run_sweep(s);
  CHECK(a.rows.size() == 12);
  CHECK(a.columns.front() == "delta1");
  CHECK(a.column_index("g2_out") < a.columns.size());
  CHECK(a.metadata["steady_state_solves"] == 3);
  CHECK(a.metadata["rows"] == 12);
  // phi = 0 and phi = 2 pi give the same output
  CHECK(*a.value(0, "g2_out") == doctest::Approx(*a.value(3, "g2_out")).epsilon(1e-10));
  s.threads = 2;
  const SweepResult b = run_sweep(s);
  CHECK(csv_text(a) == csv_text(b));
  CHECK(csv_text(a) == csv_text(run_sweep(s)));
}

TEST_CASE("failed points produce status rows, all-failed sweeps abort") {
  SweepSpec s = parse_sweep_spec(json::parse(R"({
    "model": "jc",
    "params": {"g": 0, "delta_a": 0, "delta1": 0},
    "axes": [{"name": "kappa_a", "start": 0, "stop": 1, "points": 3}],
    "cutoff": 2
  })"));
  const SweepResult r = run_sweep(s);
  CHECK(r.status[0] == "degeneracy");
  CHECK(r.status[1] == "ok");
  CHECK(r.metadata["failed_points"] == 1);
  s.axes[0].stop = 0.0;
  s.axes[0].start = 0.0;
  CHECK(error_kind([&] { run_sweep(s); }) == ErrorKind::Sweep);
}

TEST_CASE("CSV round trip") {
  SweepSpec s = kerr_point();
  s.axes.push_back(Axis{"phi", 0.0, pi, 3, AxisScale::Linear});
  const SweepResult r = run_sweep(s);
  std::istringstream in(csv_text(r));
  const SweepResult back = read_csv(in);
  CHECK(back.columns == r.columns);
  CHECK(back.status == r.status);
  REQUIRE(back.rows.size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      REQUIRE(back.rows[i][c].has_value() == r.rows[i][c].has_value());
      if (r.rows[i][c]) CHECK(*back.rows[i][c] == doctest::Approx(*r.rows[i][c]).epsilon(1e-11));
    }
  CHECK(format_number(0.25) == "0.25");
}

TEST_CASE("slope fit on synthetic power laws") {
  SweepResult r;
  r.columns = {"x", "y"};
  for (double x : {10.0, 20.0, 50.0, 100.0, 200.0}) {
    r.rows.push_back({x, 3.0 * std::pow(x, -3.0)});
    r.status.push_back("ok");
  }
  const SlopeFit f = fit_slope(r, "x", "y");
  CHECK(f.slope == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(f.intercept == doctest::Approx(std::log10(3.0)).epsilon(1e-10));
  CHECK(f.std_error < 1e-10);
  CHECK(f.points == 5);
  CHECK(fit_slope(r, "x", "y", 15.0, 250.0).points == 4);
  CHECK(error_kind([&] { fit_slope(r, "x", "y", 15.0, 60.0); }) == ErrorKind::Fit);
  CHECK(error_kind([&] { fit_slope(r, "x", "z"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Fock-cutoff convergence check") {
  const ConvergenceReport ok = convergence_check(kerr_point(0.1, 4));
  CHECK(ok.converged);
  for (const auto& [name, change] : ok.max_relative_change) {
    CAPTURE(name);
    CHECK(change < 1e-3);
  }
  const ConvergenceReport strong = convergence_check(kerr_point(0.5, 2));
  CHECK_FALSE(strong.converged);
  const ConvergenceReport vac = convergence_check(kerr_point(0.0, 3));
  CHECK(vac.converged);
  for (const auto& [name, change] : vac.max_relative_change) CHECK(change == 0.0);
}

TEST_CASE("figure recipes are valid sweeps") {
  for (const std::string& name : figure_names()) {
    CAPTURE(name);
    const FigureRecipe f = figure_recipe(name);
    CHECK(f.name == name);
    CHECK_FALSE(f.panels.empty());
    for (const auto& [panel, spec] : f.panels) CHECK_NOTHROW(spec.validate());
  }
  const FigureRecipe f1 = figure_recipe("fig1");
  const auto p = std::get<KerrParams>(f1.panels.front().second.resolve({0.0}));
  CHECK(p.U == 20.0);
  CHECK(p.delta2 == doctest::Approx(40.0));
  CHECK(p.phi == doctest::Approx(pi));
  const FigureRecipe f4 = figure_recipe("fig4");
  const auto& e = f4.panels.back().second;
  const auto q = std::get<JCParams>(e.resolve({50.0}));
  CHECK(q.delta1 == doctest::Approx(-50.0));
  CHECK(q.delta_a == doctest::Approx(-50.0));
  CHECK(q.delta2 == doctest::Approx(-100.0 / 3.0));
  CHECK(error_kind([] { figure_recipe("fig9"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("refined phase minimum lies near pi") {
  SweepSpec s = kerr_point(0.1, 4);
  s.axes.push_back(Axis{"phi", 0.9 * pi, 1.1 * pi, 3, AxisScale::Linear});
  const MinimumReport m = refine_minimum(s, "g2_out", 0.9 * pi, 1.1 * pi);
  CHECK(std::abs(m.x / pi - 1.0) < 0.01);
  REQUIRE(m.g2_1.has_value());
  CHECK(std::log10(m.value / *m.g2_1) < -5.0);
}
