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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace blockade {

using cplx = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

enum class Ladder { Annihilation, Creation, Number };
enum class TlsOp { Lowering, Raising, ExcitationProjector };

/// Basis label of a product state. `tls` is 0 for |g>, 1 for |e>, and is
/// ignored when the space has no two-level factor.
struct BasisLabel {
  int n1 = 0;
  int n2 = 0;
  int tls = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Two truncated bosonic modes, optionally followed by a two-level system.
///
/// Factor order is (mode 1, mode 2, TLS) and flattening is row-major, so the
/// last factor varies fastest:
///   index = (n1 * (N2 + 1) + n2) * T + tls,   T = 2 with a TLS, 1 without.
class CompositeSpace {
 public:
  CompositeSpace(int cutoff1, int cutoff2, bool has_tls);

  static CompositeSpace kerr(int cutoff) { return {cutoff, cutoff, false}; }
  static CompositeSpace jc(int cutoff) { return {cutoff, cutoff, true}; }

  int cutoff(int mode) const { return mode_cutoffs_.at(mode); }
  const std::vector<int>& mode_cutoffs() const { return mode_cutoffs_; }
  bool has_tls() const { return has_tls_; }

  int factor_count() const { return has_tls_ ? 3 : 2; }
  int factor_dim(int slot) const;
  int tls_slot() const { return 2; }
  int total_dim() const { return total_dim_; }

  int encode(const BasisLabel& label) const;
  BasisLabel decode(int index) const;

  bool operator==(const CompositeSpace& other) const = default;

 private:
  std::vector<int> mode_cutoffs_;
  bool has_tls_;
  int total_dim_;
};

OperatorMatrix build_mode_operator(Ladder kind, int cutoff);
OperatorMatrix build_tls_operator(TlsOp kind);

/// Lift a single-factor operator to the full space (identity elsewhere).
OperatorMatrix embed(const OperatorMatrix& op, int slot,
                     const CompositeSpace& space);

/// Convenience: the embedded annihilation operator of mode 0 or 1.
OperatorMatrix mode_annihilator(int mode, const CompositeSpace& space);
/// Embedded sigma-minus; requires a TLS factor.
OperatorMatrix tls_lowering(const CompositeSpace& space);

/// Basis ket |label> as a column vector.
StateVector basis_state(const CompositeSpace& space, const BasisLabel& label);

struct DensityDiagnostics {
  double hermiticity_error = 0.0;  // max |rho - rho^dagger|
  double trace_error = 0.0;        // |tr rho - 1|
  double min_eigenvalue = 0.0;
};

DensityDiagnostics diagnose_density(const OperatorMatrix& rho);

/// Hermitian, unit-trace, positive semidefinite state. Construction checks
/// the invariants at the declared tolerances and throws a numerical error on
/// violation.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-10;
  static constexpr double kTraceTol = 1e-8;
  static constexpr double kPositivityTol = 1e-8;

  explicit DensityMatrix(OperatorMatrix rho);

  static DensityMatrix pure(const StateVector& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const OperatorMatrix& matrix() const { return rho_; }
  DensityDiagnostics diagnostics() const { return diagnose_density(rho_); }

 private:
  OperatorMatrix rho_;
};

cplx expectation(const DensityMatrix& rho, const OperatorMatrix& op);

}  // namespace blockade
