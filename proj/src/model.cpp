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

#include "blockade/model.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    fail(ErrorKind::InvalidArgument, std::string(name) + " must be finite");
  }
}

}  // namespace

void KerrParams::validate() const {
  for (auto [v, name] : {std::pair{delta1, "delta1"}, {delta2, "delta2"}, {U, "U"},
                         {eps, "eps"}, {kappa1, "kappa1"}, {kappa2, "kappa2"},
                         {phi, "phi"}}) {
    require_finite(v, name);
  }
  if (kappa1 <= 0.0) fail(ErrorKind::InvalidArgument, "kappa1 must be > 0");
  if (kappa2 <= 0.0) fail(ErrorKind::InvalidArgument, "kappa2 must be > 0");
  if (eps < 0.0) fail(ErrorKind::InvalidArgument, "eps must be >= 0");
}

void JCParams::validate() const {
  for (auto [v, name] : {std::pair{delta1, "delta1"}, {delta_a, "delta_a"},
                         {delta2, "delta2"}, {g, "g"}, {eps, "eps"},
                         {kappa1, "kappa1"}, {kappa2, "kappa2"},
                         {kappa_a, "kappa_a"}, {phi, "phi"}}) {
    require_finite(v, name);
  }
  if (kappa1 <= 0.0) fail(ErrorKind::InvalidArgument, "kappa1 must be > 0");
  if (kappa2 <= 0.0) fail(ErrorKind::InvalidArgument, "kappa2 must be > 0");
  if (kappa_a < 0.0) fail(ErrorKind::InvalidArgument, "kappa_a must be >= 0");
  if (eps < 0.0) fail(ErrorKind::InvalidArgument, "eps must be >= 0");
}

ModelKind kind_of(const ModelParams& p) {
  return std::holds_alternative<KerrParams>(p) ? ModelKind::Kerr : ModelKind::JC;
}

CompositeSpace space_for(const ModelParams& p, int cutoff) {
  return kind_of(p) == ModelKind::Kerr ? CompositeSpace::kerr(cutoff)
                                       : CompositeSpace::jc(cutoff);
}

OperatorMatrix kerr_hamiltonian(const KerrParams& p, const CompositeSpace& space) {
  if (space.has_tls()) {
    fail(ErrorKind::InvalidArgument, "Kerr Hamiltonian needs a space without TLS");
  }
  p.validate();
  const cplx i{0.0, 1.0};
  const OperatorMatrix a1 = mode_annihilator(0, space);
  const OperatorMatrix a2 = mode_annihilator(1, space);
  const OperatorMatrix a1d = a1.adjoint();
  const OperatorMatrix a2d = a2.adjoint();
  OperatorMatrix H = p.delta1 * a1d * a1 + p.U * a1d * a1d * a1 * a1 +
                     i * p.eps * (a1d - a1) + p.delta2 * a2d * a2 +
                     i * p.eps * (a2d - a2);
  return H;
}

OperatorMatrix jc_hamiltonian(const JCParams& p, const CompositeSpace& space) {
  if (!space.has_tls()) {
    fail(ErrorKind::InvalidArgument, "JC Hamiltonian needs a space with a TLS");
  }
  p.validate();
  const cplx i{0.0, 1.0};
  const OperatorMatrix a1 = mode_annihilator(0, space);
  const OperatorMatrix a2 = mode_annihilator(1, space);
  const OperatorMatrix sm = tls_lowering(space);
  const OperatorMatrix a1d = a1.adjoint();
  const OperatorMatrix a2d = a2.adjoint();
  const OperatorMatrix sp = sm.adjoint();
  const OperatorMatrix drive = a1d + a2d;
  OperatorMatrix H = p.delta1 * a1d * a1 + p.delta_a * sp * sm +
                     p.g * (a1d * sm + sp * a1) + p.delta2 * a2d * a2 +
                     i * p.eps * (drive - drive.adjoint());
  return H;
}

OperatorMatrix hamiltonian(const ModelParams& p, const CompositeSpace& space) {
  return std::visit(
      [&](const auto& q) -> OperatorMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, KerrParams>) {
          return kerr_hamiltonian(q, space);
        } else {
          return jc_hamiltonian(q, space);
        }
      },
      p);
}

std::vector<CollapseChannel> collapse_channels(const KerrParams& p,
                                               const CompositeSpace& space) {
  p.validate();
  std::vector<CollapseChannel> channels;
  channels.push_back({mode_annihilator(0, space), p.kappa1});
  channels.push_back({mode_annihilator(1, space), p.kappa2});
  return channels;
}

std::vector<CollapseChannel> collapse_channels(const JCParams& p,
                                               const CompositeSpace& space) {
  p.validate();
  std::vector<CollapseChannel> channels;
  channels.push_back({mode_annihilator(0, space), p.kappa1});
  channels.push_back({mode_annihilator(1, space), p.kappa2});
  if (p.kappa_a > 0.0) channels.push_back({tls_lowering(space), p.kappa_a / 2.0});
  return channels;
}

std::vector<CollapseChannel> collapse_channels(const ModelParams& p,
                                               const CompositeSpace& space) {
  return std::visit([&](const auto& q) { return collapse_channels(q, space); }, p);
}

SplitModel split_model(const ModelParams& p, int cutoff) {
  const cplx i{0.0, 1.0};
  const OperatorMatrix a = build_mode_operator(Ladder::Annihilation, cutoff);
  const OperatorMatrix ad = a.adjoint();
  const int dim = cutoff + 1;
  SplitModel split;
  std::visit(
      [&](const auto& q) {
        q.validate();
        split.h_b = q.delta2 * ad * a + i * q.eps * (ad - a);
        split.channels_b.push_back({a, q.kappa2});
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, KerrParams>) {
          split.h_a = q.delta1 * ad * a + q.U * ad * ad * a * a + i * q.eps * (ad - a);
          split.channels_a.push_back({a, q.kappa1});
        } else {
          const OperatorMatrix id_mode = OperatorMatrix::Identity(dim, dim);
          const OperatorMatrix id_tls = OperatorMatrix::Identity(2, 2);
          const OperatorMatrix a1 = Eigen::kroneckerProduct(a, id_tls).eval();
          const OperatorMatrix sm =
              Eigen::kroneckerProduct(id_mode, build_tls_operator(TlsOp::Lowering)).eval();
          const OperatorMatrix a1d = a1.adjoint();
          const OperatorMatrix sp = sm.adjoint();
          split.h_a = q.delta1 * a1d * a1 + q.delta_a * sp * sm + q.g * (a1d * sm + sp * a1) +
                      i * q.eps * (a1d - a1);
          split.channels_a.push_back({a1, q.kappa1});
          if (q.kappa_a > 0.0) split.channels_a.push_back({sm, q.kappa_a / 2.0});
        }
      },
      p);
  return split;
}

OperatorMatrix effective_hamiltonian(const OperatorMatrix& H,
                                     const std::vector<CollapseChannel>& channels) {
  OperatorMatrix Heff = H;
  const cplx i{0.0, 1.0};
  for (const auto& c : channels) {
    if (c.op.rows() != H.rows() || c.op.cols() != H.cols()) {
      fail(ErrorKind::InvalidArgument, "effective_hamiltonian: dimension mismatch");
    }
    Heff -= i * c.coefficient * (c.op.adjoint() * c.op);
  }
  return Heff;
}

}  // namespace blockade
