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

// Shared helpers for the unit tests: seeded random states and operators.

#include <complex>
#include <optional>
#include <random>

#include "blockade/errors.hpp"
#include "blockade/hilbert.hpp"

namespace blockade::testing {

inline OperatorMatrix random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  OperatorMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = cplx(n(rng), n(rng));
  return m;
}

inline OperatorMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  const OperatorMatrix m = random_matrix(dim, rng);
  return 0.5 * (m + m.adjoint());
}

/// Full-rank random density matrix G G^+ / tr.
inline DensityMatrix random_density(int dim, std::mt19937_64& rng) {
  const OperatorMatrix g = random_matrix(dim, rng);
  OperatorMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho);
}

/// Kind of the blockade::Error thrown by fn, or nullopt if nothing is thrown.
template <class F>
std::optional<ErrorKind> error_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace blockade::testing
