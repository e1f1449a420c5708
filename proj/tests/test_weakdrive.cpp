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
#include <vector>

#include "blockade/liouville.hpp"
#include "blockade/weakdrive.hpp"
#include "test_support.hpp"

using namespace blockade;
using blockade::testing::error_kind;
using std::numbers::pi;

namespace {

const cplx I{0.0, 1.0};
const double kSqrt2 = std::numbers::sqrt2;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// Ordinary least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("one-excitation amplitudes of the Kerr model") {
  const KerrParams k = kerr_optimal_params(20.0);
  const AmplitudeSet a = solve_amplitudes(k);
  CHECK(std::abs(a.c00 - 1.0) == 0.0);
  CHECK(std::abs(a.c10 - k.eps / k.kappa1) < 1e-14);
  CHECK(std::abs(a.c01 - (-I * k.eps / (k.delta2 - I * k.kappa2))) < 1e-14);
  CHECK(a.residual_one < 1e-12);
  CHECK(a.residual_two < 1e-12);
  CHECK_FALSE(a.has_tls);
}

TEST_CASE("linear systems factorise into coherent amplitudes") {
  KerrParams k;
  k.U = 0.0;
  k.delta1 = 1.3;
  k.delta2 = -0.4;
  const AmplitudeSet a = solve_amplitudes(k);
  CHECK(rel(a.c20, a.c10 * a.c10 / kSqrt2) < 1e-12);
  CHECK(rel(a.c11, a.c10 * a.c01) < 1e-12);
  CHECK(rel(a.c02, a.c01 * a.c01 / kSqrt2) < 1e-12);
  CHECK(g2_cavity_from_amplitudes(a, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g2out_from_amplitudes(a, OutputMixSpec(0.7)) == doctest::Approx(1.0).epsilon(1e-12));

  JCParams j;
  j.g = 0.0;
  const AmplitudeSet b = solve_amplitudes(j);
  REQUIRE(b.has_tls);
  CHECK(std::abs(b.e00) < 1e-15);
  CHECK(rel(b.c20, b.c10 * b.c10 / kSqrt2) < 1e-12);
  CHECK(rel(b.c11, b.c10 * b.c01) < 1e-12);
  CHECK(rel(b.c02, b.c01 * b.c01 / kSqrt2) < 1e-12);
}

TEST_CASE("strong nonlinearity: optimal amplitudes satisfy C20 = sqrt2 C11") {
  const AmplitudeSet a = solve_amplitudes(kerr_optimal_params(1e6));
  CHECK(std::abs(a.c20 - kSqrt2 * a.c11) / std::abs(a.c20) < 1e-5);
}

TEST_CASE("closed-form Kerr amplitudes") {
  SUBCASE("vanish as U grows") {
    const KerrClosedForm c = closed_form_kerr(1e8, 1.0, 0.1);
    CHECK(std::abs(c.c20) < 1e-10);
    CHECK(std::abs(c.c02) < 1e-10);
  }
  SUBCASE("agree with the linear solve at U = 50") {
    const AmplitudeSet a = solve_amplitudes(kerr_optimal_params(50.0));
    const KerrClosedForm c = closed_form_kerr(50.0, 1.0, 0.1);
    CHECK(rel(c.c20, a.c20) < 0.1);
    CHECK(rel(c.c11, a.c11) < 0.1);
    CHECK(rel(c.c02, a.c02) < 0.1);
  }
  SUBCASE("give the quartic output law at U = 20") {
    const double U = 20.0, eps = 0.1;
    const KerrClosedForm c = closed_form_kerr(U, 1.0, eps);
    AmplitudeSet a;
    a.c10 = eps;
    a.c01 = -I * eps / (2.0 * U - I);
    a.c20 = c.c20;
    a.c11 = c.c11;
    a.c02 = c.c02;
    const double g2 = g2out_from_amplitudes(a, OutputMixSpec(pi));
    CHECK(g2 == doctest::Approx(std::pow(1.0 / U, 4) / 16.0).epsilon(0.1));
  }
}

TEST_CASE("blockade hierarchy |C20| ~ sqrt2 |C11| >> |C02| at the optimum") {
  for (double U : {10.0, 20.0, 50.0}) {
    const AmplitudeSet a = solve_amplitudes(kerr_optimal_params(U));
    CHECK(std::abs(a.c20) / (kSqrt2 * std::abs(a.c11)) == doctest::Approx(1.0).epsilon(0.1));
    CHECK(std::abs(a.c02) < 0.1 * std::abs(a.c20));
  }
}

TEST_CASE("output g2 at phi = pi has the destructive-interference form") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto draw = [&] { return cplx(n(rng), n(rng)); };
  for (int trial = 0; trial < 10; ++trial) {
    AmplitudeSet a;
    a.c10 = draw();
    a.c01 = draw();
    a.c20 = draw();
    a.c11 = draw();
    a.c02 = draw();
    const double literal = std::norm(kSqrt2 * a.c20 - 2.0 * a.c11 + kSqrt2 * a.c02) /
                           std::pow(std::norm(a.c10 - a.c01), 2);
    CHECK(g2out_from_amplitudes(a, OutputMixSpec(pi)) == doctest::Approx(literal).epsilon(1e-12));
  }
  AmplitudeSet perfect;
  perfect.c10 = 1.0;
  perfect.c01 = 0.1;
  perfect.c11 = 0.3 + 0.2 * I;
  perfect.c20 = kSqrt2 * perfect.c11;
  CHECK(g2out_from_amplitudes(perfect, OutputMixSpec(pi)) < 1e-30);
  AmplitudeSet dark;
  dark.c10 = dark.c01 = 0.2;
  CHECK(error_kind([&] { g2out_from_amplitudes(dark, OutputMixSpec(pi)); }) ==
        ErrorKind::UndefinedCorrelation);
}

TEST_CASE("amplitude correlations do not depend on the drive strength") {
  for (double eps : {0.1, 0.05, 0.01}) {
    const AmplitudeSet a = solve_amplitudes(kerr_optimal_params(20.0, eps));
    const AmplitudeSet b = solve_amplitudes(kerr_optimal_params(20.0, eps / 2));
    const OutputMixSpec mix(pi);
    CHECK(g2out_from_amplitudes(b, mix) ==
          doctest::Approx(g2out_from_amplitudes(a, mix)).epsilon(0.005));
    CHECK(g2_cavity_from_amplitudes(b, 1) ==
          doctest::Approx(g2_cavity_from_amplitudes(a, 1)).epsilon(0.005));
  }
}

TEST_CASE("amplitudes agree with the master equation at weak drive") {
  KerrParams k;
  k.eps = 0.01;
  const AmplitudeSet a = solve_amplitudes(k);
  const CompositeSpace s = CompositeSpace::kerr(4);
  const SteadyState ss = solve_model(k, 4);
  const OutputMixSpec mix(k.phi);
  const CorrelationReport r = correlation_report(ss.rho, s, mix);
  CHECK(*r.g2_1 == doctest::Approx(g2_cavity_from_amplitudes(a, 1)).epsilon(0.01));
  CHECK(*r.g2_2 == doctest::Approx(g2_cavity_from_amplitudes(a, 2)).epsilon(0.01));
  CHECK(*r.g2_out == doctest::Approx(g2out_from_amplitudes(a, mix)).epsilon(0.01));
  CHECK(r.n1 == doctest::Approx(std::norm(a.c10)).epsilon(0.01));

  JCParams j;
  j.eps = 0.01;
  const AmplitudeSet b = solve_amplitudes(j);
  const SteadyState sj = solve_model(j, 4);
  const CorrelationReport rj = correlation_report(sj.rho, CompositeSpace::jc(4), mix);
  CHECK(*rj.g2_1 == doctest::Approx(g2_cavity_from_amplitudes(b, 1)).epsilon(0.01));
  CHECK(*rj.g2_out == doctest::Approx(g2out_from_amplitudes(b, mix)).epsilon(0.01));
}

TEST_CASE("weak-drive solver guards") {
  KerrParams k;
  k.eps = 0.2;
  CHECK(error_kind([&] { solve_amplitudes(k); }) == ErrorKind::InvalidArgument);
  JCParams j;
  j.g = 0.0;
  j.kappa_a = 0.0;
  j.delta_a = 0.0;
  CHECK(error_kind([&] { solve_amplitudes(j); }) == ErrorKind::Degeneracy);
}

TEST_CASE("JC optimum approaches C20 = sqrt2 C11 with C02 subleading") {
  double previous = 1e300;
  double previous_c02 = 1e300;
  for (double g : {20.0, 50.0, 100.0}) {
    const AmplitudeSet a = solve_amplitudes(jc_optimal_params(g));
    const double mismatch = std::abs(a.c20 - kSqrt2 * a.c11) / std::abs(a.c11);
    const double c02 = std::abs(a.c02) / std::abs(a.c11);
    CHECK(mismatch < previous);
    CHECK(c02 < previous_c02);
    previous = mismatch;
    previous_c02 = c02;
  }
  CHECK(previous < 0.05);
  CHECK(previous_c02 < 0.05);
}

TEST_CASE("scaling predictions") {
  const ScalingPrediction k = scaling_prediction(ModelKind::Kerr, 20.0);
  CHECK(k.g2_out == doctest::Approx(std::pow(20.0, -4) / 16.0));
  CHECK(k.g2_1 == doctest::Approx(1.0 / 400.0));
  CHECK_FALSE(k.extrapolated);
  const ScalingPrediction j = scaling_prediction(ModelKind::JC, 20.0);
  CHECK(j.g2_out == doctest::Approx(1e-4));
  CHECK(j.g2_1 == doctest::Approx(0.09));
  const ScalingPrediction low = scaling_prediction(ModelKind::Kerr, 1.0);
  CHECK(low.g2_out == doctest::Approx(1.0 / 16.0));
  CHECK(low.g2_1 == doctest::Approx(1.0));
  CHECK(low.extrapolated);
  CHECK(scaling_prediction(ModelKind::Kerr, 40.0, 2.0).g2_out == doctest::Approx(k.g2_out));
  CHECK(error_kind([] { scaling_prediction(ModelKind::Kerr, -1.0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("optimal working points") {
  const OptimalPoint k = optimal_point(ModelKind::Kerr, 20.0);
  CHECK(k.phi == doctest::Approx(pi));
  CHECK(k.detuning == doctest::Approx(40.0));
  REQUIRE(k.mirror_phi.has_value());
  CHECK(*k.mirror_phi == doctest::Approx(0.0));
  CHECK(*k.mirror_detuning == doctest::Approx(-40.0));
  const OptimalPoint j = optimal_point(ModelKind::JC, 20.0);
  CHECK(j.phi == doctest::Approx(pi));
  CHECK(j.detuning == doctest::Approx(-40.0 / 3.0));
  CHECK(j.delta1 == doctest::Approx(-20.0));
  const JCParams jp = jc_optimal_params(30.0);
  CHECK(jp.delta_a == doctest::Approx(-30.0));
  CHECK(jp.delta2 == doctest::Approx(-20.0));
}

TEST_CASE("weak-drive scaling slopes") {
  std::vector<double> x, yk, yk1, yj, yj1;
  for (double s : {10.0, 20.0, 50.0, 100.0}) {
    x.push_back(std::log10(s));
    const AmplitudeSet k = solve_amplitudes(kerr_optimal_params(s, 0.01));
    yk.push_back(std::log10(g2out_from_amplitudes(k, OutputMixSpec(pi))));
    yk1.push_back(std::log10(g2_cavity_from_amplitudes(k, 1)));
    const AmplitudeSet j = solve_amplitudes(jc_optimal_params(s, 0.01));
    yj.push_back(std::log10(g2out_from_amplitudes(j, OutputMixSpec(pi))));
    yj1.push_back(std::log10(g2_cavity_from_amplitudes(j, 1)));
  }
  CHECK(ls_slope(x, yk) == doctest::Approx(-4.0).epsilon(0.1 / 4));
  CHECK(ls_slope(x, yk1) == doctest::Approx(-2.0).epsilon(0.1 / 2));
  CHECK(ls_slope(x, yj) == doctest::Approx(-4.0).epsilon(0.1 / 4));
  CHECK(ls_slope(x, yj1) == doctest::Approx(-2.0).epsilon(0.1 / 2));
}
