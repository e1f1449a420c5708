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

#include "blockade/liouville.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

constexpr double kRk4StabilityRadius = 2.78;

SparseOperator to_sparse(const OperatorMatrix& m) {
  SparseOperator s = m.sparseView(cplx(0.0), 0.0);
  s.makeCompressed();
  return s;
}

StateVector vectorize(const OperatorMatrix& rho) {
  return Eigen::Map<const StateVector>(rho.data(), rho.size());
}

OperatorMatrix unvectorize(const StateVector& v, int dim) {
  return Eigen::Map<const OperatorMatrix>(v.data(), dim, dim);
}

}  // namespace

Liouvillian::Liouvillian(SparseOperator generator, int hilbert_dim)
    : L_(std::move(generator)), dim_(hilbert_dim) {
  if (L_.rows() != static_cast<Eigen::Index>(dim_) * dim_ || L_.cols() != L_.rows()) {
    fail(ErrorKind::InvalidArgument, "Liouvillian size does not match dim^2");
  }
  L_.makeCompressed();
}

OperatorMatrix Liouvillian::apply(const OperatorMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    fail(ErrorKind::InvalidArgument, "Liouvillian::apply: dimension mismatch");
  }
  return unvectorize(L_ * vectorize(rho), dim_);
}

double Liouvillian::gershgorin_bound() const {
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(L_.rows());
  for (int k = 0; k < L_.outerSize(); ++k) {
    for (SparseOperator::InnerIterator it(L_, k); it; ++it) {
      row_sums(it.row()) += std::abs(it.value());
    }
  }
  return row_sums.maxCoeff();
}

Liouvillian build_liouvillian(const OperatorMatrix& H,
                              const std::vector<CollapseChannel>& channels) {
  const int d = static_cast<int>(H.rows());
  if (H.cols() != d || d == 0) {
    fail(ErrorKind::InvalidArgument, "Hamiltonian must be square and non-empty");
  }
  const cplx i{0.0, 1.0};
  SparseOperator id(d, d);
  id.setIdentity();
  const SparseOperator h = to_sparse(H);
  SparseOperator htr = to_sparse(H.transpose());

  SparseOperator L = -i * (Eigen::kroneckerProduct(id, h).eval() -
                           Eigen::kroneckerProduct(htr, id).eval());
  for (const auto& ch : channels) {
    if (ch.op.rows() != d || ch.op.cols() != d) {
      fail(ErrorKind::InvalidArgument, "collapse operator dimension mismatch");
    }
    if (!(ch.coefficient > 0.0)) {
      fail(ErrorKind::InvalidArgument, "collapse coefficient must be > 0");
    }
    const OperatorMatrix cdc = ch.op.adjoint() * ch.op;
    const SparseOperator jump =
        Eigen::kroneckerProduct(to_sparse(ch.op.conjugate()), to_sparse(ch.op)).eval();
    const SparseOperator left = Eigen::kroneckerProduct(id, to_sparse(cdc)).eval();
    const SparseOperator right =
        Eigen::kroneckerProduct(to_sparse(cdc.transpose()), id).eval();
    L += ch.coefficient * (2.0 * jump - left - right);
  }
  L.prune(cplx(0.0), 0.0);
  return Liouvillian(std::move(L), d);
}

SteadyState steady_state(const Liouvillian& L, const SteadyStateOptions& opts) {
  const int d = L.hilbert_dim();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  const SparseOperator& gen = L.generator();

  // Row 0 (the |0><0| population equation) is linearly dependent on the other
  // population rows because the generator is trace preserving.
  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(gen.nonZeros() + d);
  double scale = 0.0;
  for (int k = 0; k < gen.outerSize(); ++k) {
    for (SparseOperator::InnerIterator it(gen, k); it; ++it) {
      scale = std::max(scale, std::abs(it.value()));
      if (it.row() != 0) triplets.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int j = 0; j < d; ++j) triplets.emplace_back(0, j * (d + 1), 1.0);
  SparseOperator A(n, n);
  A.setFromTriplets(triplets.begin(), triplets.end());
  A.makeCompressed();

  Eigen::SparseLU<SparseOperator, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) {
    fail(ErrorKind::Degeneracy,
         "steady state is not unique: bordered Liouvillian is singular (" +
             lu.lastErrorMessage() + ")");
  }

  // A couple of inverse-iteration steps expose a (near) null vector of the
  // bordered system, which appears when L has a second stationary state.
  StateVector probe(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    probe(k) = cplx(std::cos(0.7 * static_cast<double>(k) + 0.3),
                    std::sin(1.3 * static_cast<double>(k)));
  }
  probe.normalize();
  double growth = 0.0;
  for (int iter = 0; iter < 3; ++iter) {
    StateVector next = lu.solve(probe);
    growth = next.norm();
    if (!std::isfinite(growth)) break;
    probe = next / growth;
  }
  if (!std::isfinite(growth) || 1.0 / growth < opts.degeneracy_tol * std::max(scale, 1.0)) {
    fail(ErrorKind::Degeneracy,
         "steady state is not unique: bordered Liouvillian is numerically singular");
  }

  StateVector rhs = StateVector::Zero(n);
  rhs(0) = 1.0;
  const StateVector x = lu.solve(rhs);
  if (!x.allFinite()) fail(ErrorKind::Numerical, "steady-state solve produced non-finite values");

  OperatorMatrix rho = unvectorize(x, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double residual = (gen * vectorize(rho)).cwiseAbs().maxCoeff();
  if (!(residual < opts.residual_tol)) {
    fail(ErrorKind::Numerical,
         "steady-state residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return SteadyState{DensityMatrix(std::move(rho)), residual};
}

double stable_time_step(const Liouvillian& L, double safety) {
  const double bound = L.gershgorin_bound();
  if (!(bound > 0.0)) return 1.0;
  return safety * kRk4StabilityRadius / bound;
}

DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& L, double dt,
                     double T) {
  if (!(dt > 0.0) || !(T > 0.0)) {
    fail(ErrorKind::InvalidArgument, "evolve: dt and T must be positive");
  }
  if (rho0.dim() != L.hilbert_dim()) {
    fail(ErrorKind::InvalidArgument, "evolve: state dimension does not match generator");
  }
  const auto steps = static_cast<long>(std::ceil(T / dt - 1e-12));
  const double h = T / static_cast<double>(steps);
  if (h * L.gershgorin_bound() > kRk4StabilityRadius) {
    fail(ErrorKind::StepSize, "evolve: time step exceeds the RK4 stability bound");
  }

  const int d = L.hilbert_dim();
  const SparseOperator& gen = L.generator();
  StateVector y = vectorize(rho0.matrix());
  StateVector k1, k2, k3, k4;
  const auto trace_of = [d](const StateVector& v) {
    cplx t = 0.0;
    for (int j = 0; j < d; ++j) t += v(j * (d + 1));
    return t;
  };
  const int check_every = 64;
  for (long s = 0; s < steps; ++s) {
    k1 = gen * y;
    k2 = gen * (y + 0.5 * h * k1);
    k3 = gen * (y + 0.5 * h * k2);
    k4 = gen * (y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (s % check_every == 0 || s + 1 == steps) {
      const double drift = std::abs(trace_of(y) - 1.0);
      const double peak = y.cwiseAbs().maxCoeff();
      if (!(drift <= 1e-4) || !(peak <= 1.0 + 1e-4)) {
        fail(ErrorKind::StepSize, "evolve: integration became unstable");
      }
    }
  }
  return DensityMatrix(unvectorize(y, d));
}

OperatorMatrix product_state(const OperatorMatrix& rho_a, const OperatorMatrix& rho_b,
                             const CompositeSpace& space) {
  const int t = space.has_tls() ? 2 : 1;
  const int da = (space.cutoff(0) + 1) * t;
  const int db = space.cutoff(1) + 1;
  if (rho_a.rows() != da || rho_a.cols() != da || rho_b.rows() != db || rho_b.cols() != db) {
    fail(ErrorKind::InvalidArgument, "product_state: factor dimensions do not match space");
  }
  const int d = space.total_dim();
  OperatorMatrix rho(d, d);
  for (int r = 0; r < d; ++r) {
    const BasisLabel x = space.decode(r);
    for (int c = 0; c < d; ++c) {
      const BasisLabel y = space.decode(c);
      rho(r, c) = rho_a(x.n1 * t + x.tls, y.n1 * t + y.tls) * rho_b(x.n2, y.n2);
    }
  }
  return rho;
}

SteadyState solve_model(const ModelParams& p, int cutoff, const SteadyStateOptions& opts,
                        SolveRoute route) {
  const CompositeSpace space = space_for(p, cutoff);
  const Liouvillian L =
      build_liouvillian(hamiltonian(p, space), collapse_channels(p, space));
  if (route == SolveRoute::Full) return steady_state(L, opts);

  const SplitModel split = split_model(p, cutoff);
  // Subsystem residuals are re-checked on the full generator below.
  SteadyStateOptions sub = opts;
  sub.residual_tol = std::numeric_limits<double>::infinity();
  const SteadyState a = steady_state(build_liouvillian(split.h_a, split.channels_a), sub);
  const SteadyState b = steady_state(build_liouvillian(split.h_b, split.channels_b), sub);
  OperatorMatrix rho = product_state(a.rho.matrix(), b.rho.matrix(), space);
  const double residual = L.apply(rho).cwiseAbs().maxCoeff();
  if (!(residual < opts.residual_tol)) {
    fail(ErrorKind::Numerical,
         "steady-state residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return SteadyState{DensityMatrix(std::move(rho)), residual};
}

}  // namespace blockade
