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

#ifndef UCJIQP_PROBES_H
#define UCJIQP_PROBES_H

#include <cstdint>
#include <string>
#include <vector>

#include "ucjiqp/fermion.h"
#include "ucjiqp/iqp.h"
#include "ucjiqp/rng.h"
#include "ucjiqp/state_vector.h"

namespace ucjiqp {

/// Seeded random IQP instance. Fields and included couplings are uniform in
/// (-pi, pi]; each pair (a, b) is included with probability `density`.
/// Draw order: v_0..v_{n-1}, then per pair in (a, b) lexicographic order an
/// inclusion draw followed by a weight draw.
IqpCircuit random_iqp(int n, uint64_t seed, double density = 1.0);

/// Random mix of Givens and number-diagonal gates on `modes` modes, angles
/// uniform in (-pi, pi]. Needs modes >= 2.
std::vector<FermionGate> random_gate_sequence(int modes, int count, CounterStream &rng);

/// Normalized state whose components are drawn from the unit square and rescaled.
StateVector random_state(int modes, CounterStream &rng);

struct PropertyTally {
    std::string name;
    int passed = 0;
    int trials = 0;
    /// Largest observed deviation for the property (0 for exact checks).
    double worst = 0.0;

    bool ok() const {
        return passed == trials;
    }
};

/// Runs the compile-and-simulate invariants on `trials` random circuits of
/// `n` IQP qubits (seeds derived from `seed`).
std::vector<PropertyTally> check_invariants(int n, uint64_t seed, int trials);

struct OracleCheckResult {
    int modes;
    int gates;
    double gap;          // L-infinity distance between kernel and dense oracle states
    double oracle_unitarity;  // max |U^dag U - I|
};

/// One random gate sequence applied to one random state by both the JW
/// kernels and the dense Fock oracle.
OracleCheckResult oracle_check(int modes, int gates, uint64_t seed);

/// Per-gate and final-state probes used by check_invariants; exposed so the
/// acceptance suite can report the worst values it sees.
struct TraceProbe {
    double max_leak = 0.0;
    double max_norm_error = 0.0;
    bool parity_ok = true;
    bool particle_number_ok = true;
    int parity_checks = 0;
};

TraceProbe trace_compiled(const IqpCircuit &c);

}  // namespace ucjiqp

#endif
