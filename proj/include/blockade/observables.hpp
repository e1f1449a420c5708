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

#include <array>
#include <optional>

#include "blockade/hilbert.hpp"

namespace blockade {

/// Beam-splitter mixing of the two cavity outputs,
/// a_out ~ sqrt(kappa1) a1 + e^{i phi} sqrt(kappa2) a2 (the 1/sqrt 2 and the
/// vacuum input drop out of every normally ordered moment).
struct OutputMixSpec {
  OutputMixSpec(double phi, double kappa1 = 1.0, double kappa2 = 1.0);

  double phi;  // reduced to [0, 2 pi)
  double kappa1;
  double kappa2;
};

/// Normally ordered moments of the two cavity modes, indexed 0 (cavity 1)
/// and 1 (cavity 2): second[j][k] = <a_j^+ a_k>,
/// fourth[j][k][l][m] = <a_j^+ a_k^+ a_l a_m>.
struct Moments {
  std::array<std::array<cplx, 2>, 2> second{};
  std::array<std::array<std::array<std::array<cplx, 2>, 2>, 2>, 2> fourth{};
};

Moments compute_moments(const DensityMatrix& rho, const CompositeSpace& space);

inline constexpr double kOccupationFloor = 1e-14;

/// <a_i^+ a_i> for mode 1 or 2.
double mean_photon(const DensityMatrix& rho, const CompositeSpace& space, int mode);
/// <a_i^+ a_i^+ a_i a_i> / <a_i^+ a_i>^2; undefined-correlation error when
/// the occupation is at or below kOccupationFloor.
double g2_cavity(const DensityMatrix& rho, const CompositeSpace& space, int mode);
/// <a_j^+ a_k^+ a_l a_m>, modes numbered 1 and 2.
cplx quartic_correlator(const DensityMatrix& rho, const CompositeSpace& space,
                        int j, int k, int l, int m);
double n_out(const DensityMatrix& rho, const CompositeSpace& space,
             const OutputMixSpec& spec);
double g2_out(const DensityMatrix& rho, const CompositeSpace& space,
              const OutputMixSpec& spec);

// Same quantities from precomputed moments; a phase sweep over one state
// only needs the moments once.
double mean_photon(const Moments& m, int mode);
double g2_cavity(const Moments& m, int mode);
double n_out(const Moments& m, const OutputMixSpec& spec);
double g2_out(const Moments& m, const OutputMixSpec& spec);

struct CorrelationReport {
  double n1 = 0.0;
  double n2 = 0.0;
  double n_out = 0.0;
  std::optional<double> g2_1;  // nullopt: undefined (vanishing occupation)
  std::optional<double> g2_2;
  std::optional<double> g2_out;
  Moments moments;
};

CorrelationReport correlation_report(const Moments& m, const OutputMixSpec& spec);
CorrelationReport correlation_report(const DensityMatrix& rho,
                                     const CompositeSpace& space,
                                     const OutputMixSpec& spec);

}  // namespace blockade
