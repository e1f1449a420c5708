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

#include "blockade/model.hpp"
#include "blockade/observables.hpp"

namespace blockade {

/// Steady-state amplitudes of the weakly driven system, truncated at two
/// excitations and normalized so that the vacuum amplitude is 1.
///
/// `c_n1n2` are the amplitudes of |n1, n2> (with the TLS in |g> for the JC
/// model); `e_n1n2` are the JC amplitudes with the TLS excited and stay zero
/// for the Kerr model.
struct AmplitudeSet {
  bool has_tls = false;
  cplx c00{1.0, 0.0};
  cplx c10, c01;
  cplx c20, c11, c02;
  cplx e00;
  cplx e10, e01;
  double residual_one = 0.0;  // max |stationary equation| in each block
  double residual_two = 0.0;
};

struct WeakDriveOptions {
  /// Perturbative regime guard: eps must be below this fraction of the
  /// smaller cavity rate.
  double max_drive_ratio = 0.2;
  double residual_tol = 1e-12;
};

/// Exact solution of the one- and two-excitation blocks of
/// d|psi>/dt = -i H_eff |psi> = 0, with the vacuum amplitude fixed to 1 and
/// the feedback of higher blocks onto lower ones dropped (it is higher order
/// in eps). A singular block raises a degeneracy error.
AmplitudeSet solve_amplitudes(const ModelParams& p, const WeakDriveOptions& opts = {});

/// Large-U approximations for the Kerr model at its optimal working point.
struct KerrClosedForm {
  cplx c20, c11, c02;
};
KerrClosedForm closed_form_kerr(double U, double kappa, double eps);

/// Output-field g2 to leading order in the drive. For any phase,
///   g2_out = |sqrt2 k1 C20 + 2 sqrt(k1 k2) e^{i phi} C11 + sqrt2 k2 e^{2i phi} C02|^2
///            / N_out^2,
///   N_out  = |sqrt(k1) C10 + e^{i phi} sqrt(k2) C01|^2.
/// At phi = pi and k1 = k2 = kappa this is
///   (2 kappa^2 / N_out^2) {|C20 - sqrt2 C11|^2 + |C02|^2
///                          - 2 Re[(sqrt2 C11^* - C20^*) C02]}.
double g2out_from_amplitudes(const AmplitudeSet& amps, const OutputMixSpec& spec);
double nout_from_amplitudes(const AmplitudeSet& amps, const OutputMixSpec& spec);
/// 2 |C20|^2 / |C10|^4 (mode 1) or 2 |C02|^2 / |C01|^4 (mode 2).
double g2_cavity_from_amplitudes(const AmplitudeSet& amps, int mode);

struct ScalingPrediction {
  double g2_out = 0.0;
  double g2_1 = 0.0;
  bool extrapolated = false;  // strength below 10 kappa
};

/// Kerr: ((1/16)(kappa/U)^4, (kappa/U)^2). JC: (16 (kappa/g)^4, 36 (kappa/g)^2).
ScalingPrediction scaling_prediction(ModelKind model, double strength, double kappa = 1.0);

struct OptimalPoint {
  double phi = 0.0;
  /// Kerr: cavity detuning delta = omega2 - omega1. JC: auxiliary detuning Delta2.
  double detuning = 0.0;
  /// Cavity-1 detuning (and TLS detuning for JC) at this point.
  double delta1 = 0.0;
  std::optional<double> mirror_phi;
  std::optional<double> mirror_detuning;
};

OptimalPoint optimal_point(ModelKind model, double strength);

KerrParams kerr_optimal_params(double U, double eps = 0.1);
JCParams jc_optimal_params(double g, double eps = 0.1);

}  // namespace blockade
