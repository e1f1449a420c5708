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

#include <numbers>
#include <variant>
#include <vector>

#include "blockade/hilbert.hpp"

namespace blockade {

// All rates and energies are in units of the cavity decay rate kappa.

/// Nonlinear (Kerr) cavity plus an uncoupled linear cavity, both driven with
/// the same amplitude. Detunings are cavity minus pump frequency.
struct KerrParams {
  double delta1 = 0.0;
  double delta2 = 40.0;
  double U = 20.0;
  double eps = 0.1;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double phi = std::numbers::pi;

  /// Detuning between the cavities, omega2 - omega1.
  double cavity_detuning() const { return delta2 - delta1; }

  void validate() const;
};

/// Two-level system coupled to cavity 1, uncoupled linear cavity 2.
struct JCParams {
  double delta1 = -20.0;
  double delta_a = -20.0;
  double delta2 = -40.0 / 3.0;
  double g = 20.0;
  double eps = 0.1;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double kappa_a = 2.0;
  double phi = std::numbers::pi;

  void validate() const;
};

using ModelParams = std::variant<KerrParams, JCParams>;

enum class ModelKind { Kerr, JC };

ModelKind kind_of(const ModelParams& p);
CompositeSpace space_for(const ModelParams& p, int cutoff);

/// Dissipator term coefficient * (2 c rho c^+ - c^+ c rho - rho c^+ c).
struct CollapseChannel {
  OperatorMatrix op;
  double coefficient = 0.0;
};

OperatorMatrix kerr_hamiltonian(const KerrParams& p, const CompositeSpace& space);
OperatorMatrix jc_hamiltonian(const JCParams& p, const CompositeSpace& space);
OperatorMatrix hamiltonian(const ModelParams& p, const CompositeSpace& space);

/// Cavity channels (a_i, kappa_i). For the JC model the TLS channel is
/// (sigma_-, kappa_a / 2): with this dissipator form the TLS amplitude
/// decays at kappa_a / 2, which is what puts -i kappa sigma_+ sigma_- into
/// H_eff for kappa_a = 2 kappa. Zero rates produce no channel.
std::vector<CollapseChannel> collapse_channels(const KerrParams& p,
                                               const CompositeSpace& space);
std::vector<CollapseChannel> collapse_channels(const JCParams& p,
                                               const CompositeSpace& space);
std::vector<CollapseChannel> collapse_channels(const ModelParams& p,
                                               const CompositeSpace& space);

/// The cavities never couple, so both H and the dissipators split into a
/// part A acting on cavity 1 (with the TLS for JC, basis index n1 * T + tls)
/// and a part B acting on cavity 2 alone.
struct SplitModel {
  OperatorMatrix h_a;
  OperatorMatrix h_b;
  std::vector<CollapseChannel> channels_a;
  std::vector<CollapseChannel> channels_b;
};

SplitModel split_model(const ModelParams& p, int cutoff);

/// H - i sum_k coefficient_k c_k^+ c_k.
OperatorMatrix effective_hamiltonian(const OperatorMatrix& H,
                                     const std::vector<CollapseChannel>& channels);

}  // namespace blockade
