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

#include <string>
#include <utility>
#include <vector>

#include "blockade/config.hpp"

namespace blockade {

/// Canned sweeps reproducing one figure; multi-panel figures carry one spec
/// per panel.
struct FigureRecipe {
  std::string name;
  std::vector<std::pair<std::string, SweepSpec>> panels;
};

/// fig1: Kerr Delta1 scan at phi = pi, U = 20, delta = 2U.
/// fig2: Kerr phi x delta map, phi cut at delta = 2U, delta cuts at phi = pi.
/// fig3: Kerr U scan (log, 10..100) at delta = 2U, phi = pi.
/// fig4: JC Delta2 x phi map, phi cut at Delta2 = -2g/3, Delta2 cut at
///       phi = pi, g scan with Delta1 = Delta_a = -g and Delta2 = -2g/3.
/// All use eps = kappa/10. Unknown names raise invalid-argument.
FigureRecipe figure_recipe(const std::string& name);

const std::vector<std::string>& figure_names();

}  // namespace blockade
