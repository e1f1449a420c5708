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

#include "blockade/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSlack = 1e-10;

int mode_index(int mode) {
  if (mode != 1 && mode != 2) {
    fail(ErrorKind::InvalidArgument, "mode must be 1 or 2, got " + std::to_string(mode));
  }
  return mode - 1;
}

// tr(A^+ B)
cplx hs_inner(const OperatorMatrix& A, const OperatorMatrix& B) {
  return A.conjugate().cwiseProduct(B).sum();
}

double nonnegative(double v, const char* what) {
  if (v < -kSlack) {
    fail(ErrorKind::Numerical, std::string(what) + " is negative: " + std::to_string(v));
  }
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

OutputMixSpec::OutputMixSpec(double phi_, double kappa1_, double kappa2_)
    : phi(0.0), kappa1(kappa1_), kappa2(kappa2_) {
  if (!std::isfinite(phi_)) fail(ErrorKind::InvalidArgument, "phi must be finite");
  if (!(kappa1 > 0.0) || !(kappa2 >= 0.0)) {
    fail(ErrorKind::InvalidArgument, "output mixing needs kappa1 > 0 and kappa2 >= 0");
  }
  phi = std::fmod(phi_, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
}

Moments compute_moments(const DensityMatrix& rho, const CompositeSpace& space) {
  if (rho.dim() != space.total_dim()) {
    fail(ErrorKind::InvalidArgument, "state dimension does not match space");
  }
  const OperatorMatrix& r = rho.matrix();
  const std::array<OperatorMatrix, 2> a{mode_annihilator(0, space),
                                        mode_annihilator(1, space)};
  // <A^+ B> = tr(A^+ (B rho))
  std::array<OperatorMatrix, 2> a_rho{a[0] * r, a[1] * r};
  Moments m;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m.second[j][k] = hs_inner(a[j], a_rho[k]);
  }
  // Pair operators a_l a_m (symmetric since the modes commute).
  std::array<std::array<OperatorMatrix, 2>, 2> pair;
  std::array<std::array<OperatorMatrix, 2>, 2> pair_rho;
  for (int l = 0; l < 2; ++l) {
    for (int n = l; n < 2; ++n) {
      pair[l][n] = a[l] * a[n];
      pair_rho[l][n] = pair[l][n] * r;
      if (n != l) {
        pair[n][l] = pair[l][n];
        pair_rho[n][l] = pair_rho[l][n];
      }
    }
  }
  // a_j^+ a_k^+ = (a_k a_j)^+
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int n = 0; n < 2; ++n)
          m.fourth[j][k][l][n] = hs_inner(pair[k][j], pair_rho[l][n]);
  return m;
}

double mean_photon(const Moments& m, int mode) {
  const int i = mode_index(mode);
  return nonnegative(m.second[i][i].real(), "mean photon number");
}

double g2_cavity(const Moments& m, int mode) {
  const int i = mode_index(mode);
  const double n = mean_photon(m, mode);
  if (!(n > kOccupationFloor)) {
    fail(ErrorKind::UndefinedCorrelation,
         "g2 of mode " + std::to_string(mode) + " undefined: vanishing occupation");
  }
  const double num = nonnegative(m.fourth[i][i][i][i].real(), "<a+a+aa>");
  return num / (n * n);
}

double n_out(const Moments& m, const OutputMixSpec& spec) {
  const double k1 = spec.kappa1;
  const double k2 = spec.kappa2;
  const cplx phase = std::polar(1.0, spec.phi);
  const double flux = k1 * m.second[0][0].real() + k2 * m.second[1][1].real() +
                      2.0 * std::sqrt(k1 * k2) * (phase * m.second[0][1]).real();
  return nonnegative(flux, "output flux");
}

double g2_out(const Moments& m, const OutputMixSpec& spec) {
  const double flux = n_out(m, spec);
  if (!(flux > kOccupationFloor)) {
    fail(ErrorKind::UndefinedCorrelation,
         "output g2 undefined: output flux vanishes (destructive interference)");
  }
  const std::array<double, 2> sk{std::sqrt(spec.kappa1), std::sqrt(spec.kappa2)};
  // e^{i n phi} with n = l + m - j - k in {-2..2}
  std::array<cplx, 5> phase;
  for (int n = -2; n <= 2; ++n) phase[n + 2] = std::polar(1.0, n * spec.phi);
  cplx num = 0.0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int n = 0; n < 2; ++n)
          num += phase[l + n - j - k + 2] * (sk[j] * sk[k] * sk[l] * sk[n]) *
                 m.fourth[j][k][l][n];
  if (std::abs(num.imag()) > kSlack) {
    fail(ErrorKind::Numerical, "output fourth moment has imaginary residue " +
                                   std::to_string(num.imag()));
  }
  return nonnegative(num.real(), "<a_out^+ a_out^+ a_out a_out>") / (flux * flux);
}

double mean_photon(const DensityMatrix& rho, const CompositeSpace& space, int mode) {
  const int i = mode_index(mode);
  const OperatorMatrix a = mode_annihilator(i, space);
  return nonnegative(expectation(rho, a.adjoint() * a).real(), "mean photon number");
}

double g2_cavity(const DensityMatrix& rho, const CompositeSpace& space, int mode) {
  return g2_cavity(compute_moments(rho, space), mode);
}

cplx quartic_correlator(const DensityMatrix& rho, const CompositeSpace& space,
                        int j, int k, int l, int m) {
  const int jj = mode_index(j), kk = mode_index(k), ll = mode_index(l),
            mm = mode_index(m);
  return compute_moments(rho, space).fourth[jj][kk][ll][mm];
}

double n_out(const DensityMatrix& rho, const CompositeSpace& space,
             const OutputMixSpec& spec) {
  return n_out(compute_moments(rho, space), spec);
}

double g2_out(const DensityMatrix& rho, const CompositeSpace& space,
              const OutputMixSpec& spec) {
  return g2_out(compute_moments(rho, space), spec);
}

CorrelationReport correlation_report(const Moments& m, const OutputMixSpec& spec) {
  CorrelationReport r;
  r.moments = m;
  r.n1 = mean_photon(m, 1);
  r.n2 = mean_photon(m, 2);
  r.n_out = n_out(m, spec);
  const auto maybe = [](auto&& f) -> std::optional<double> {
    try {
      return f();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UndefinedCorrelation) throw;
      return std::nullopt;
    }
  };
  r.g2_1 = maybe([&] { return g2_cavity(m, 1); });
  r.g2_2 = maybe([&] { return g2_cavity(m, 2); });
  r.g2_out = maybe([&] { return g2_out(m, spec); });
  return r;
}

CorrelationReport correlation_report(const DensityMatrix& rho,
                                     const CompositeSpace& space,
                                     const OutputMixSpec& spec) {
  return correlation_report(compute_moments(rho, space), spec);
}

}  // namespace blockade
