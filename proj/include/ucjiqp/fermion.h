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

#ifndef UCJIQP_FERMION_H
#define UCJIQP_FERMION_H

#include <variant>
#include <vector>

#include "ucjiqp/state_vector.h"

namespace ucjiqp {

/// R_pq(theta) = exp[theta (a_p^dag a_q - a_q^dag a_p)], p < q.
struct GivensGate {
    int p;
    int q;
    double theta;

    GivensGate adjoint() const {
        return {p, q, -theta};
    }
    bool operator==(const GivensGate &) const = default;
};

/// D_pq(theta) = exp(i theta n_p n_q), p <= q. With p == q this is the
/// single-mode phase exp(i theta n_p).
struct NumberDiagonalGate {
    int p;
    int q;
    double theta;

    bool operator==(const NumberDiagonalGate &) const = default;
};

using FermionGate = std::variant<GivensGate, NumberDiagonalGate>;

/// Throws InputError unless 0 <= p < q < modes and theta is finite.
void validate(const GivensGate &g, int modes);
/// Throws InputError unless 0 <= p <= q < modes and theta is finite.
void validate(const NumberDiagonalGate &d, int modes);

/// Half-filled reference |0_0 ... 0_{n-1} 1_n ... 1_{2n-1}> on 2n modes.
StateVector reference_state(int n);

/// Jordan-Wigner kernels. Mode p carries a Z string over modes 0..p-1, so a
/// Givens rotation picks up (-1)^w where w is the occupation of modes
/// strictly between p and q, evaluated per basis state.
void apply_givens_inplace(StateVector &s, const GivensGate &g);
void apply_number_diagonal_inplace(StateVector &s, const NumberDiagonalGate &d);
void apply_gate_inplace(StateVector &s, const FermionGate &gate);

StateVector apply_givens(StateVector s, const GivensGate &g);
StateVector apply_number_diagonal(StateVector s, const NumberDiagonalGate &d);

}  // namespace ucjiqp

#endif
