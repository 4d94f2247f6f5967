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

#ifndef UCJIQP_UCJ_H
#define UCJIQP_UCJ_H

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ucjiqp/fermion.h"
#include "ucjiqp/state_vector.h"

namespace ucjiqp {

/// Single-layer UCJ parameters for one spin sector.
///
/// `k` is the real antisymmetric orbital-rotation generator. `theta` holds
/// the density-density angles in its upper triangle (p <= q); the Jastrow
/// matrix is recovered as J_pp = i theta_pp and J_pq = J_qp = i theta_pq / 2.
struct UcjParams {
    int modes = 0;
    Eigen::MatrixXd k;
    Eigen::MatrixXd theta;

    std::complex<double> jastrow(int p, int q) const;
};

/// exp(-K) exp(J) exp(K) |ref> in gate form. `givens` is applied first in
/// list order, then every diagonal, then the adjoints of `givens` in reverse
/// order. The state is finally multiplied by exp(i global_phase).
struct Ucj1Compiled {
    int modes = 0;
    std::vector<GivensGate> givens;
    std::vector<NumberDiagonalGate> diagonal;
    int reference_n = 0;
    double global_phase = 0.0;

    /// Throws InputError on bad indices, non-finite angles, or modes != 2 * reference_n.
    void validate() const;

    /// Full gate list in application order (global phase excluded).
    std::vector<FermionGate> gate_sequence() const;
};

/// V_a = R_{n-a-1, n+a}((-1)^{a+1} pi/4) for a = n-1 down to 0.
std::vector<GivensGate> givens_schedule_v(int n);

enum class UcjStage { kForward, kDiagonal, kReverse, kDone };

struct UcjStep {
    UcjStage stage;
    size_t index;               // position within the stage
    const FermionGate *gate;    // null for kDone
};

/// Called with the state immediately before each applied gate, and once more
/// with the final state (before the global phase is applied) at kDone. When
/// every diagonal angle is zero no gates are applied.
using StepObserver = std::function<void(const UcjStep &, const StateVector &)>;

StateVector simulate_ucj(const Ucj1Compiled &c, const StepObserver &observer = nullptr);

/// e^K for real antisymmetric K. Throws InputError if |K + K^T| > 1e-12.
Eigen::MatrixXd orbital_rotation_matrix(const Eigen::MatrixXd &k);

/// Mode-space matrix of R_pq(theta): exp(theta (E_pq - E_qp)).
Eigen::MatrixXd single_body_matrix(const GivensGate &g, int modes);

/// Q_last * ... * Q_first for a schedule given in application order.
Eigen::MatrixXd schedule_matrix(const std::vector<GivensGate> &gates, int modes);

/// Givens schedule whose schedule_matrix reproduces Q, by a column-wise
/// triangular sweep. At most m(m-1)/2 gates; rotations with zero angle are
/// omitted. Throws InputError if Q is not special orthogonal within 1e-8.
std::vector<GivensGate> decompose_givens(const Eigen::MatrixXd &q);

struct RecoveredGenerator {
    Eigen::MatrixXd k;
    /// Set when some rotation angle sat on the branch cut at pi; the
    /// principal value was used.
    bool pi_ambiguous = false;
};

/// Principal real logarithm of a special orthogonal matrix via real Schur.
RecoveredGenerator log_special_orthogonal(const Eigen::MatrixXd &q);

/// Antisymmetric K with exp(K) = schedule_matrix(gates, modes).
RecoveredGenerator recover_k(const std::vector<GivensGate> &gates, int modes);

UcjParams params_from_compiled(const Ucj1Compiled &c);

/// Inverse direction: schedule from decompose_givens(e^K), one diagonal per
/// nonzero theta entry, zero global phase.
Ucj1Compiled compiled_from_params(const UcjParams &params, int reference_n);

struct SpinEmbedding {
    StateVector state;
    StateVector up;
    StateVector down;
    /// Max-abs difference between `state` and up (x) down.
    double residual;
};

/// Runs both sectors as one 4n-mode circuit (up on modes 0..2n-1, down on
/// 2n..4n-1, no cross-spin Jastrow terms) and checks it factorizes.
SpinEmbedding embed_full_spin(const Ucj1Compiled &up, const Ucj1Compiled &down);

}  // namespace ucjiqp

#endif
