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

// Brute-force reference constructions for tests. Everything here is built
// from explicit 2x2 matrices and Kronecker products so that it shares no
// code path with the bit-indexed kernels under test.

#ifndef UCJIQP_TESTS_DENSE_ORACLES_H
#define UCJIQP_TESTS_DENSE_ORACLES_H

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ucjiqp/iqp.h"

namespace ucjiqp::testing {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXcd pauli_z() {
    Eigen::MatrixXcd z(2, 2);
    z << 1, 0, 0, -1;
    return z;
}

inline Eigen::MatrixXcd hadamard() {
    Eigen::MatrixXcd h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

/// `op` on qubit `k` of `n`, identity elsewhere; qubit k is bit k of the index,
/// so qubit n-1 is the leftmost Kronecker factor.
inline Eigen::MatrixXcd on_qubit(const Eigen::MatrixXcd &op, int k, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int g = n - 1; g >= 0; --g) {
        out = kron(out, g == k ? op : Eigen::MatrixXcd::Identity(2, 2));
    }
    return out;
}

/// Dense generator D = sum w Z_a Z_b + sum v Z_a.
inline Eigen::MatrixXcd dense_generator(const IqpCircuit &c) {
    const int n = c.n();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[key, w] : c.couplings()) {
        d += w * on_qubit(pauli_z(), key.first, n) * on_qubit(pauli_z(), key.second, n);
    }
    for (int a = 0; a < n; ++a) {
        d += c.fields()[static_cast<size_t>(a)] * on_qubit(pauli_z(), a, n);
    }
    return d;
}

/// exp(iD) for the diagonal generator, exponentiated entry by entry.
inline Eigen::MatrixXcd dense_exp_i_diagonal(const Eigen::MatrixXcd &d) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d.rows(), d.cols());
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        out(i, i) = std::exp(std::complex<double>(0.0, d(i, i).real()));
    }
    return out;
}

inline Eigen::MatrixXcd hadamard_all(int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int g = 0; g < n; ++g) {
        out = kron(out, hadamard());
    }
    return out;
}

/// H^n exp(iD) H^n as a dense matrix.
inline Eigen::MatrixXcd dense_iqp_unitary(const IqpCircuit &c) {
    const Eigen::MatrixXcd h = hadamard_all(c.n());
    return h * dense_exp_i_diagonal(dense_generator(c)) * h;
}

/// Matrix exponential by plain Taylor series with scaling and squaring.
inline Eigen::MatrixXd taylor_exp(const Eigen::MatrixXd &a) {
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const Eigen::MatrixXd scaled = a / std::pow(2.0, squarings);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = term;
    for (int k = 1; k < 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace ucjiqp::testing

#endif
