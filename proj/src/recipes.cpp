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

#include "blockade/recipes.hpp"

#include <numbers>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDrive = 0.1;
constexpr int kKerrCutoff = 5;
constexpr int kJcCutoff = 5;
constexpr double kU = 20.0;
constexpr double kG = 20.0;

SweepSpec kerr_base() {
  SweepSpec s;
  s.model = ModelKind::Kerr;
  s.cutoff = kKerrCutoff;
  s.params = {{"U", kU}, {"eps", kDrive}, {"kappa1", 1.0}, {"kappa2", 1.0}};
  return s;
}

SweepSpec jc_base() {
  SweepSpec s;
  s.model = ModelKind::JC;
  s.cutoff = kJcCutoff;
  s.params = {{"g", kG},        {"eps", kDrive},   {"kappa1", 1.0},
              {"kappa2", 1.0},  {"kappa_a", 2.0},  {"delta1", -kG}};
  return s;
}

Axis phi_axis(int points) { return {"phi", 0.0, 2.0 * kPi, points, AxisScale::Linear}; }

FigureRecipe fig1() {
  SweepSpec s = kerr_base();
  s.params["phi"] = kPi;
  s.params["delta"] = 2.0 * kU;
  s.axes = {{"delta1", -50.0, 50.0, 201, AxisScale::Linear}};
  return {"fig1", {{"b", s}}};
}

FigureRecipe fig2() {
  FigureRecipe r{"fig2", {}};
  SweepSpec map = kerr_base();
  map.params["delta1"] = 0.0;
  map.axes = {{"delta", -3.0 * kU, 3.0 * kU, 121, AxisScale::Linear}, phi_axis(101)};
  map.outputs = {"g2_1", "g2_out"};
  r.panels.emplace_back("a", map);

  SweepSpec phi_cut = kerr_base();
  phi_cut.params["delta1"] = 0.0;
  phi_cut.params["delta"] = 2.0 * kU;
  phi_cut.axes = {phi_axis(201)};
  phi_cut.refine_minimum = "g2_out";
  r.panels.emplace_back("b", phi_cut);

  SweepSpec delta_cut = kerr_base();
  delta_cut.params["delta1"] = 0.0;
  delta_cut.params["phi"] = kPi;
  delta_cut.axes = {{"delta", -3.0 * kU, 3.0 * kU, 241, AxisScale::Linear}};
  delta_cut.refine_minimum = "g2_out";
  r.panels.emplace_back("c", delta_cut);

  SweepSpec photons = delta_cut;
  photons.refine_minimum.clear();
  photons.outputs = {"n1", "n2"};
  r.panels.emplace_back("d", photons);
  return r;
}

FigureRecipe fig3() {
  SweepSpec s = kerr_base();
  s.params.erase("U");
  s.params["delta1"] = 0.0;
  s.params["phi"] = kPi;
  s.links = {{"delta", "U", 2.0, 0.0}};
  s.axes = {{"U", 10.0, 100.0, 11, AxisScale::Log}};
  return {"fig3", {{"main", s}}};
}

FigureRecipe fig4() {
  FigureRecipe r{"fig4", {}};
  SweepSpec map = jc_base();
  map.axes = {{"delta2", -40.0, 0.0, 81, AxisScale::Linear}, phi_axis(101)};
  map.outputs = {"g2_1", "g2_out"};
  r.panels.emplace_back("b", map);

  SweepSpec phi_cut = jc_base();
  phi_cut.params["delta2"] = -2.0 * kG / 3.0;
  phi_cut.axes = {phi_axis(201)};
  phi_cut.refine_minimum = "g2_out";
  r.panels.emplace_back("c", phi_cut);

  SweepSpec d2_cut = jc_base();
  d2_cut.params["phi"] = kPi;
  d2_cut.axes = {{"delta2", -20.0, -6.0, 141, AxisScale::Linear}};
  d2_cut.refine_minimum = "g2_out";
  r.panels.emplace_back("d", d2_cut);

  SweepSpec g_scan = jc_base();
  g_scan.params.erase("g");
  g_scan.params.erase("delta1");
  g_scan.params["phi"] = kPi;
  g_scan.links = {{"delta1", "g", -1.0, 0.0},
                  {"delta_a", "g", -1.0, 0.0},
                  {"delta2", "g", -2.0 / 3.0, 0.0}};
  g_scan.axes = {{"g", 10.0, 100.0, 11, AxisScale::Log}};
  r.panels.emplace_back("e", g_scan);
  return r;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4"};
  return names;
}

FigureRecipe figure_recipe(const std::string& name) {
  FigureRecipe r;
  if (name == "fig1") {
    r = fig1();
  } else if (name == "fig2") {
    r = fig2();
  } else if (name == "fig3") {
    r = fig3();
  } else if (name == "fig4") {
    r = fig4();
  } else {
    fail(ErrorKind::InvalidArgument, "unknown figure '" + name + "'");
  }
  for (const auto& [panel, spec] : r.panels) spec.validate();
  return r;
}

}  // namespace blockade
