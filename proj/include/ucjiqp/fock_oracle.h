// Copyright 2026 The ucjiqp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UCJIQP_FOCK_ORACLE_H
#define UCJIQP_FOCK_ORACLE_H

#include <span>

#include <Eigen/Dense>

#include "ucjiqp/fermion.h"
#include "ucjiqp/state_vector.h"

namespace ucjiqp {

// Dense Fock-space reference path. Everything here is built from explicit
// Pauli Kronecker products and matrix exponentials and shares no code with
// the bit-twiddling kernels in fermion.h.

inline constexpr int kOracleMaxModes = 12;

/// Annihilation operator a_p = Z_0 ... Z_{p-1} (X_p + iY_p)/2 as a
/// 2^modes x 2^modes matrix, with mode g the g-th bit of the row/column index.
Eigen::MatrixXcd jw_dense_ladder(int p, int modes);

/// Product of exp(generator) over `gates` in application order: for Givens
/// the generator is theta (a_p^dag a_q - a_q^dag a_p), for diagonals
/// i theta n_p n_q.
Eigen::MatrixXcd fock_oracle_unitary(std::span<const FermionGate> gates, int modes);

Eigen::VectorXcd to_eigen(const StateVector &s);

}  // namespace ucjiqp

#endif
