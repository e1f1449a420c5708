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

#include "blockade/hilbert.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "blockade/errors.hpp"

namespace blockade {

CompositeSpace::CompositeSpace(int cutoff1, int cutoff2, bool has_tls)
    : mode_cutoffs_{cutoff1, cutoff2}, has_tls_(has_tls) {
  if (cutoff1 < 1 || cutoff2 < 1) {
    fail(ErrorKind::InvalidArgument, "mode cutoff must be >= 1");
  }
  total_dim_ = (cutoff1 + 1) * (cutoff2 + 1) * (has_tls ? 2 : 1);
}

int CompositeSpace::factor_dim(int slot) const {
  if (slot == 0 || slot == 1) return mode_cutoffs_[slot] + 1;
  if (slot == 2 && has_tls_) return 2;
  fail(ErrorKind::InvalidArgument, "no factor at slot " + std::to_string(slot));
}

int CompositeSpace::encode(const BasisLabel& label) const {
  const int d2 = mode_cutoffs_[1] + 1;
  const int t = has_tls_ ? 2 : 1;
  if (label.n1 < 0 || label.n1 > mode_cutoffs_[0] || label.n2 < 0 ||
      label.n2 > mode_cutoffs_[1] || label.tls < 0 || label.tls >= t) {
    fail(ErrorKind::InvalidArgument, "basis label outside truncated space");
  }
  return (label.n1 * d2 + label.n2) * t + label.tls;
}

BasisLabel CompositeSpace::decode(int index) const {
  if (index < 0 || index >= total_dim_) {
    fail(ErrorKind::InvalidArgument, "basis index out of range");
  }
  const int d2 = mode_cutoffs_[1] + 1;
  const int t = has_tls_ ? 2 : 1;
  BasisLabel label;
  label.tls = index % t;
  index /= t;
  label.n2 = index % d2;
  label.n1 = index / d2;
  return label;
}

OperatorMatrix build_mode_operator(Ladder kind, int cutoff) {
  if (cutoff < 1) fail(ErrorKind::InvalidArgument, "mode cutoff must be >= 1");
  const int dim = cutoff + 1;
  OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  switch (kind) {
    case Ladder::Annihilation: return a;
    case Ladder::Creation: return a.adjoint();
    case Ladder::Number: return a.adjoint() * a;
  }
  return a;
}

OperatorMatrix build_tls_operator(TlsOp kind) {
  // basis (|g>, |e>)
  OperatorMatrix lower = OperatorMatrix::Zero(2, 2);
  lower(0, 1) = 1.0;
  switch (kind) {
    case TlsOp::Lowering: return lower;
    case TlsOp::Raising: return lower.adjoint();
    case TlsOp::ExcitationProjector: return lower.adjoint() * lower;
  }
  return lower;
}

OperatorMatrix embed(const OperatorMatrix& op, int slot,
                     const CompositeSpace& space) {
  if (slot < 0 || slot >= space.factor_count()) {
    fail(ErrorKind::InvalidArgument, "embed: slot out of range");
  }
  if (op.rows() != space.factor_dim(slot) || op.cols() != op.rows()) {
    fail(ErrorKind::InvalidArgument, "embed: operator does not match factor dimension");
  }
  OperatorMatrix result = OperatorMatrix::Identity(1, 1);
  for (int s = 0; s < space.factor_count(); ++s) {
    const int d = space.factor_dim(s);
    if (s == slot) {
      result = Eigen::kroneckerProduct(result, op).eval();
    } else {
      result = Eigen::kroneckerProduct(result, OperatorMatrix::Identity(d, d)).eval();
    }
  }
  return result;
}

OperatorMatrix mode_annihilator(int mode, const CompositeSpace& space) {
  return embed(build_mode_operator(Ladder::Annihilation, space.cutoff(mode)),
               mode, space);
}

OperatorMatrix tls_lowering(const CompositeSpace& space) {
  if (!space.has_tls()) fail(ErrorKind::InvalidArgument, "space has no TLS factor");
  return embed(build_tls_operator(TlsOp::Lowering), space.tls_slot(), space);
}

StateVector basis_state(const CompositeSpace& space, const BasisLabel& label) {
  StateVector psi = StateVector::Zero(space.total_dim());
  psi(space.encode(label)) = 1.0;
  return psi;
}

DensityDiagnostics diagnose_density(const OperatorMatrix& rho) {
  DensityDiagnostics d;
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(rho.trace() - 1.0);
  const OperatorMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();
  return d;
}

DensityMatrix::DensityMatrix(OperatorMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    fail(ErrorKind::InvalidArgument, "density matrix must be square and non-empty");
  }
  const auto d = diagnose_density(rho_);
  if (!(d.hermiticity_error <= kHermiticityTol)) {
    fail(ErrorKind::Numerical, "density matrix not Hermitian: max|rho - rho^+| = " +
                                   std::to_string(d.hermiticity_error));
  }
  if (!(d.trace_error <= kTraceTol)) {
    fail(ErrorKind::Numerical, "density matrix trace deviates from 1 by " +
                                   std::to_string(d.trace_error));
  }
  if (!(d.min_eigenvalue >= -kPositivityTol)) {
    fail(ErrorKind::Numerical, "density matrix has negative eigenvalue " +
                                   std::to_string(d.min_eigenvalue));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) fail(ErrorKind::InvalidArgument, "cannot normalize zero state");
  const StateVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

cplx expectation(const DensityMatrix& rho, const OperatorMatrix& op) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
    fail(ErrorKind::InvalidArgument, "expectation: dimension mismatch");
  }
  // tr(rho op) without forming the product
  return (rho.matrix().transpose().cwiseProduct(op)).sum();
}

}  // namespace blockade
