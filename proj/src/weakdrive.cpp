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

#include "blockade/weakdrive.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

using Block = std::vector<BasisLabel>;

Eigen::MatrixXcd sub_block(const OperatorMatrix& H, const CompositeSpace& space,
                           const Block& rows, const Block& cols) {
  Eigen::MatrixXcd m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m(r, c) = H(space.encode(rows[r]), space.encode(cols[c]));
  return m;
}

Eigen::VectorXcd solve_block(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& rhs,
                             const char* name, double* residual) {
  // Blocks are at most 5x5; the exact singular-value ratio is cheap and, unlike the
  // LU condition estimate, reliable for exactly singular matrices.
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(A).singularValues();
  if (!(sv(sv.size() - 1) > 1e-13 * sv(0))) {
    fail(ErrorKind::Degeneracy, std::string(name) +
                                    " block of H_eff is singular (dark-state degeneracy)");
  }
  Eigen::VectorXcd x = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve(rhs);
  *residual = (A * x - rhs).cwiseAbs().maxCoeff();
  return x;
}

}  // namespace

AmplitudeSet solve_amplitudes(const ModelParams& p, const WeakDriveOptions& opts) {
  const CompositeSpace space = space_for(p, 2);
  const OperatorMatrix Heff =
      effective_hamiltonian(hamiltonian(p, space), collapse_channels(p, space));

  const double eps = std::visit([](const auto& q) { return q.eps; }, p);
  const double kappa_min = std::visit(
      [](const auto& q) { return std::min(q.kappa1, q.kappa2); }, p);
  if (!(eps < opts.max_drive_ratio * kappa_min)) {
    fail(ErrorKind::InvalidArgument,
         "drive too strong for the two-excitation truncation (eps >= " +
             std::to_string(opts.max_drive_ratio) + " kappa)");
  }

  const bool tls = space.has_tls();
  const Block vac{{0, 0, 0}};
  Block one{{1, 0, 0}, {0, 1, 0}};
  Block two{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}};
  if (tls) {
    one.push_back({0, 0, 1});
    two.push_back({1, 0, 1});
    two.push_back({0, 1, 1});
  }

  AmplitudeSet amps;
  amps.has_tls = tls;
  const Eigen::VectorXcd source1 = -sub_block(Heff, space, one, vac).col(0);
  const Eigen::VectorXcd c1 =
      solve_block(sub_block(Heff, space, one, one), source1, "one-excitation",
                  &amps.residual_one);
  const Eigen::VectorXcd source2 = -sub_block(Heff, space, two, one) * c1;
  const Eigen::VectorXcd c2 =
      solve_block(sub_block(Heff, space, two, two), source2, "two-excitation",
                  &amps.residual_two);
  if (!(amps.residual_one < opts.residual_tol) || !(amps.residual_two < opts.residual_tol)) {
    fail(ErrorKind::Numerical, "weak-drive block residual exceeds tolerance");
  }

  amps.c10 = c1(0);
  amps.c01 = c1(1);
  amps.c20 = c2(0);
  amps.c11 = c2(1);
  amps.c02 = c2(2);
  if (tls) {
    amps.e00 = c1(2);
    amps.e10 = c2(3);
    amps.e01 = c2(4);
  }
  return amps;
}

KerrClosedForm closed_form_kerr(double U, double kappa, double eps) {
  const cplx i{0.0, 1.0};
  const double e2 = eps * eps;
  const cplx pole = -i / (U - i * kappa);
  KerrClosedForm c;
  c.c20 = pole * e2 / (kSqrt2 * kappa);
  c.c02 = -kSqrt2 / (2.0 * U - i * kappa) * e2 / (4.0 * U);
  c.c11 = pole * (e2 / (2.0 * kappa) - i * e2 / (4.0 * U));
  return c;
}

double nout_from_amplitudes(const AmplitudeSet& amps, const OutputMixSpec& spec) {
  const cplx phase = std::polar(1.0, spec.phi);
  return std::norm(std::sqrt(spec.kappa1) * amps.c10 +
                   phase * std::sqrt(spec.kappa2) * amps.c01);
}

double g2out_from_amplitudes(const AmplitudeSet& amps, const OutputMixSpec& spec) {
  const double flux = nout_from_amplitudes(amps, spec);
  if (!(flux > kOccupationFloor)) {
    fail(ErrorKind::UndefinedCorrelation, "output g2 undefined: output flux vanishes");
  }
  const double k1 = spec.kappa1, k2 = spec.kappa2;
  const cplx phase = std::polar(1.0, spec.phi);
  const cplx two_photon = kSqrt2 * k1 * amps.c20 +
                          2.0 * std::sqrt(k1 * k2) * phase * amps.c11 +
                          kSqrt2 * k2 * phase * phase * amps.c02;
  return std::norm(two_photon) / (flux * flux);
}

double g2_cavity_from_amplitudes(const AmplitudeSet& amps, int mode) {
  if (mode != 1 && mode != 2) fail(ErrorKind::InvalidArgument, "mode must be 1 or 2");
  const cplx one = mode == 1 ? amps.c10 : amps.c01;
  const cplx two = mode == 1 ? amps.c20 : amps.c02;
  const double n = std::norm(one);
  if (!(n > kOccupationFloor)) {
    fail(ErrorKind::UndefinedCorrelation, "g2 undefined: vanishing one-photon amplitude");
  }
  return 2.0 * std::norm(two) / (n * n);
}

ScalingPrediction scaling_prediction(ModelKind model, double strength, double kappa) {
  if (!(strength > 0.0) || !(kappa > 0.0)) {
    fail(ErrorKind::InvalidArgument, "scaling prediction needs positive strength and kappa");
  }
  const double r = kappa / strength;
  ScalingPrediction s;
  if (model == ModelKind::Kerr) {
    s.g2_out = std::pow(r, 4) / 16.0;
    s.g2_1 = r * r;
  } else {
    s.g2_out = 16.0 * std::pow(r, 4);
    s.g2_1 = 36.0 * r * r;
  }
  s.extrapolated = strength / kappa < 10.0;
  return s;
}

OptimalPoint optimal_point(ModelKind model, double strength) {
  if (!(strength > 0.0)) fail(ErrorKind::InvalidArgument, "strength must be positive");
  OptimalPoint o;
  o.phi = std::numbers::pi;
  if (model == ModelKind::Kerr) {
    o.detuning = 2.0 * strength;
    o.delta1 = 0.0;
    o.mirror_phi = 0.0;
    o.mirror_detuning = -2.0 * strength;
  } else {
    o.detuning = -2.0 * strength / 3.0;
    o.delta1 = -strength;
  }
  return o;
}

KerrParams kerr_optimal_params(double U, double eps) {
  const OptimalPoint o = optimal_point(ModelKind::Kerr, U);
  KerrParams p;
  p.U = U;
  p.eps = eps;
  p.delta1 = o.delta1;
  p.delta2 = o.delta1 + o.detuning;
  p.phi = o.phi;
  return p;
}

JCParams jc_optimal_params(double g, double eps) {
  const OptimalPoint o = optimal_point(ModelKind::JC, g);
  JCParams p;
  p.g = g;
  p.eps = eps;
  p.delta1 = o.delta1;
  p.delta_a = o.delta1;
  p.delta2 = o.detuning;
  p.phi = o.phi;
  return p;
}

}  // namespace blockade
