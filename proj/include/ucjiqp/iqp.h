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

#ifndef UCJIQP_IQP_H
#define UCJIQP_IQP_H

#include <map>
#include <utility>
#include <vector>

#include "ucjiqp/distribution.h"
#include "ucjiqp/state_vector.h"

namespace ucjiqp {

/// An IQP circuit H^n exp(iD) H^n on n qubits with the quadratic generator
///
///   D = sum_{a<b} w_ab Z_a Z_b + sum_a v_a Z_a.
///
/// Couplings are stored once per unordered pair under the key (min, max).
class IqpCircuit {
   public:
    using Pair = std::pair<int, int>;

    explicit IqpCircuit(int n);
    IqpCircuit(int n, std::vector<double> fields, std::map<Pair, double> couplings);

    int n() const {
        return n_;
    }
    const std::vector<double> &fields() const {
        return v_;
    }
    const std::map<Pair, double> &couplings() const {
        return w_;
    }

    void set_field(int a, double value);
    /// Sets w_ab = w_ba; the order of `a` and `b` is irrelevant.
    void set_coupling(int a, int b, double value);
    /// Symmetric lookup, zero for absent pairs and for a == b.
    double coupling(int a, int b) const;

   private:
    void check_qubit(int a) const;

    int n_;
    std::vector<double> v_;
    std::map<Pair, double> w_;
};

/// Controlled phase exp(i theta) on |1_a 1_b>, a < b.
struct CpTerm {
    int a;
    int b;
    double theta;
    bool operator==(const CpTerm &) const = default;
};

/// exp(iD) = exp(i global_phase) * prod_a exp(i v'_a Z_a) * prod_{a<b} CP_ab(4 w_ab)
/// with v'_a = v_a + sum_{b != a} w_ab.
struct DiagonalSpec {
    std::vector<double> v_prime;
    std::vector<CpTerm> cp_terms;
    double global_phase = 0.0;
};

/// Eigenvalue of D on every basis state, index x with z_g = 1 - 2 * bit_g(x).
std::vector<double> diagonal_phases(const IqpCircuit &c);

/// H^n exp(iD) H^n |0^n>.
StateVector iqp_state(const IqpCircuit &c);

Distribution iqp_distribution(const IqpCircuit &c);

DiagonalSpec decompose_diagonal(const IqpCircuit &c);

}  // namespace ucjiqp

#endif
