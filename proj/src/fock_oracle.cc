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

#include "ucjiqp/fock_oracle.h"

#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ucjiqp/errors.h"

namespace ucjiqp {

namespace {

void check_oracle_capacity(int modes) {
    if (modes < 1) {
        throw InputError("oracle needs at least one mode");
    }
    if (modes > kOracleMaxModes) {
        throw CapacityError("dense Fock oracle is capped at " + std::to_string(kOracleMaxModes) + " modes, got " +
                            std::to_string(modes));
    }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd generator(const FermionGate &gate, int modes) {
    if (const auto *g = std::get_if<GivensGate>(&gate)) {
        validate(*g, modes);
        const Eigen::MatrixXcd ap = jw_dense_ladder(g->p, modes);
        const Eigen::MatrixXcd aq = jw_dense_ladder(g->q, modes);
        return g->theta * (ap.adjoint() * aq - aq.adjoint() * ap);
    }
    const auto &d = std::get<NumberDiagonalGate>(gate);
    validate(d, modes);
    const Eigen::MatrixXcd ap = jw_dense_ladder(d.p, modes);
    const Eigen::MatrixXcd aq = jw_dense_ladder(d.q, modes);
    const Eigen::MatrixXcd np = ap.adjoint() * ap;
    const Eigen::MatrixXcd nq = aq.adjoint() * aq;
    return Complex(0.0, d.theta) * (np * nq);
}

}  // namespace

Eigen::MatrixXcd jw_dense_ladder(int p, int modes) {
    check_oracle_capacity(modes);
    if (p < 0 || p >= modes) {
        throw InputError("ladder mode " + std::to_string(p) + " out of range");
    }
    Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd pauli_z(2, 2);
    pauli_z << 1, 0, 0, -1;
    Eigen::MatrixXcd lowering(2, 2);  // (X + iY)/2 = |0><1|
    lowering << 0, 1, 0, 0;

    // Mode g is bit g, so mode modes-1 is the leftmost Kronecker factor.
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int g = modes - 1; g >= 0; --g) {
        const Eigen::MatrixXcd &factor = g < p ? pauli_z : (g == p ? lowering : identity);
        out = kron(out, factor);
    }
    return out;
}

Eigen::MatrixXcd fock_oracle_unitary(std::span<const FermionGate> gates, int modes) {
    check_oracle_capacity(modes);
    const Eigen::Index dim = Eigen::Index{1} << modes;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const FermionGate &gate : gates) {
        const Eigen::MatrixXcd step = generator(gate, modes).exp();
        u = step * u;
    }
    return u;
}

Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (uint64_t x = 0; x < s.dimension(); ++x) {
        v(static_cast<Eigen::Index>(x)) = s[x];
    }
    return v;
}

}  // namespace ucjiqp
