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

#include "ucjiqp/iqp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ucjiqp/errors.h"

namespace ucjiqp {

namespace {

void check_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw InputError(std::string(what) + " must be finite");
    }
}

// In-place Walsh-Hadamard transform with the 1/sqrt(2) factor per qubit.
// Unnormalized Walsh-Hadamard butterflies; the caller folds in 2^-n.
void walsh_hadamard(std::vector<Complex> &amps, int n) {
    for (int k = 0; k < n; ++k) {
        const uint64_t bit = uint64_t{1} << k;
        for (uint64_t x = 0; x < amps.size(); ++x) {
            if (x & bit) {
                continue;
            }
            const Complex a0 = amps[x];
            const Complex a1 = amps[x | bit];
            amps[x] = a0 + a1;
            amps[x | bit] = a0 - a1;
        }
    }
}

}  // namespace

IqpCircuit::IqpCircuit(int n) : n_(n), v_(n > 0 ? static_cast<size_t>(n) : 0, 0.0) {
    if (n < 1) {
        throw InputError("IQP circuit needs at least one qubit, got n=" + std::to_string(n));
    }
}

IqpCircuit::IqpCircuit(int n, std::vector<double> fields, std::map<Pair, double> couplings) : IqpCircuit(n) {
    if (static_cast<int>(fields.size()) != n) {
        throw InputError("field vector has length " + std::to_string(fields.size()) + ", expected " +
                         std::to_string(n));
    }
    for (int a = 0; a < n; ++a) {
        set_field(a, fields[static_cast<size_t>(a)]);
    }
    for (const auto &[key, value] : couplings) {
        if (key.first >= key.second) {
            throw InputError("coupling keys must satisfy a < b");
        }
        set_coupling(key.first, key.second, value);
    }
}

void IqpCircuit::check_qubit(int a) const {
    if (a < 0 || a >= n_) {
        throw InputError("qubit index " + std::to_string(a) + " out of range for n=" + std::to_string(n_));
    }
}

void IqpCircuit::set_field(int a, double value) {
    check_qubit(a);
    check_finite(value, "field weight");
    v_[static_cast<size_t>(a)] = value;
}

void IqpCircuit::set_coupling(int a, int b, double value) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw InputError("coupling needs two distinct qubits, got " + std::to_string(a) + " twice");
    }
    check_finite(value, "coupling weight");
    w_[{std::min(a, b), std::max(a, b)}] = value;
}

double IqpCircuit::coupling(int a, int b) const {
    if (a == b) {
        return 0.0;
    }
    auto it = w_.find({std::min(a, b), std::max(a, b)});
    return it == w_.end() ? 0.0 : it->second;
}

std::vector<double> diagonal_phases(const IqpCircuit &c) {
    const int n = c.n();
    check_state_capacity(n);
    std::vector<double> phases(uint64_t{1} << n, 0.0);
    for (uint64_t x = 0; x < phases.size(); ++x) {
        auto z = [x](int g) { return ((x >> g) & 1) ? -1.0 : 1.0; };
        double value = 0.0;
        for (const auto &[key, w] : c.couplings()) {
            value += w * z(key.first) * z(key.second);
        }
        for (int a = 0; a < n; ++a) {
            value += c.fields()[static_cast<size_t>(a)] * z(a);
        }
        phases[x] = value;
    }
    return phases;
}

StateVector iqp_state(const IqpCircuit &c) {
    const int n = c.n();
    const std::vector<double> phases = diagonal_phases(c);
    std::vector<Complex> amps(phases.size());
    for (uint64_t x = 0; x < amps.size(); ++x) {
        amps[x] = std::polar(1.0, phases[x]);
    }
    walsh_hadamard(amps, n);
    // Both Hadamard layers together contribute exactly 2^-n.
    const double scale = std::ldexp(1.0, -n);
    for (Complex &a : amps) {
        a *= scale;
    }
    return StateVector(n, std::move(amps));
}

Distribution iqp_distribution(const IqpCircuit &c) {
    return distribution_of(iqp_state(c));
}

DiagonalSpec decompose_diagonal(const IqpCircuit &c) {
    DiagonalSpec spec;
    spec.v_prime = c.fields();
    for (int a = 0; a < c.n(); ++a) {
        for (int b = 0; b < c.n(); ++b) {
            spec.v_prime[static_cast<size_t>(a)] += c.coupling(a, b);
        }
    }
    for (const auto &[key, w] : c.couplings()) {
        spec.cp_terms.push_back({key.first, key.second, 4.0 * w});
        spec.global_phase -= w;
    }
    return spec;
}

}  // namespace ucjiqp
