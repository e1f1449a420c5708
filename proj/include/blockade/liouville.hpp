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

#include <vector>

#include <Eigen/SparseCore>

#include "blockade/hilbert.hpp"
#include "blockade/model.hpp"

namespace blockade {

using SparseOperator = Eigen::SparseMatrix<cplx>;

/// Lindblad generator acting on column-stacked density matrices,
/// vec(rho)[i + j * dim] = rho(i, j), so vec(A X B) = (B^T kron A) vec(X).
class Liouvillian {
 public:
  Liouvillian(SparseOperator generator, int hilbert_dim);

  int hilbert_dim() const { return dim_; }
  const SparseOperator& generator() const { return L_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(L_); }

  /// d rho / dt for the given rho.
  OperatorMatrix apply(const OperatorMatrix& rho) const;
  StateVector apply_vec(const StateVector& vec_rho) const { return L_ * vec_rho; }

  /// max_i sum_j |L_ij|, an upper bound on the spectral radius.
  double gershgorin_bound() const;

 private:
  SparseOperator L_;
  int dim_;
};

/// L rho = -i[H, rho] + sum_k gamma_k (2 c rho c^+ - c^+ c rho - rho c^+ c).
Liouvillian build_liouvillian(const OperatorMatrix& H,
                              const std::vector<CollapseChannel>& channels);

struct SteadyState {
  DensityMatrix rho;
  double residual = 0.0;  // ||L vec(rho)||_inf
};

struct SteadyStateOptions {
  double residual_tol = 1e-10;
  /// Relative floor on the smallest eigenvalue modulus of the bordered
  /// system; below it the stationary state is declared non-unique.
  double degeneracy_tol = 1e-9;
};

/// Unique stationary state. One population row of L is replaced by the
/// trace constraint and the bordered system is solved by sparse LU.
SteadyState steady_state(const Liouvillian& L, const SteadyStateOptions& opts = {});

/// Largest RK4 step that keeps every eigenvalue of L inside the stability
/// region, scaled by `safety` (< 1). 1e-6 agreement with the stationary state
/// at T = 20 / kappa needs safety of about 0.05.
double stable_time_step(const Liouvillian& L, double safety = 0.05);

/// Classical fourth-order Runge-Kutta integration of d rho / dt = L rho up
/// to time T. The step is shortened so T is hit exactly. Throws a step-size
/// error when dt exceeds the RK4 stability bound or the state drifts (trace
/// off by more than 1e-4 or an entry above 1 + 1e-4).
DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& L, double dt,
                     double T);

enum class SolveRoute {
  /// Solve cavity 1 (+TLS) and cavity 2 separately and take the product.
  Factorized,
  /// One bordered solve of the full two-cavity generator.
  Full,
};

/// rho_a (cavity 1, with TLS for JC) and rho_b (cavity 2) combined into a
/// state on the composite space.
OperatorMatrix product_state(const OperatorMatrix& rho_a, const OperatorMatrix& rho_b,
                             const CompositeSpace& space);

/// Steady state of the given model at the given Fock cutoff. Both routes
/// report the residual against the full generator.
SteadyState solve_model(const ModelParams& p, int cutoff,
                        const SteadyStateOptions& opts = {},
                        SolveRoute route = SolveRoute::Factorized);

}  // namespace blockade
