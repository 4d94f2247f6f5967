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

#include "ucjiqp/fermion.h"

#include <bit>
#include <cmath>
#include <string>

#include "ucjiqp/errors.h"

namespace ucjiqp {

namespace {

void check_mode(int p, int modes) {
    if (p < 0 || p >= modes) {
        throw InputError("mode index " + std::to_string(p) + " out of range for " + std::to_string(modes) +
                         " modes");
    }
}

}  // namespace

void validate(const GivensGate &g, int modes) {
    check_mode(g.p, modes);
    check_mode(g.q, modes);
    if (g.p >= g.q) {
        throw InputError("Givens rotation needs p < q, got (" + std::to_string(g.p) + ", " + std::to_string(g.q) +
                         ")");
    }
    if (!std::isfinite(g.theta)) {
        throw InputError("Givens angle must be finite");
    }
}

void validate(const NumberDiagonalGate &d, int modes) {
    check_mode(d.p, modes);
    check_mode(d.q, modes);
    if (d.p > d.q) {
        throw InputError("number-diagonal gate needs p <= q, got (" + std::to_string(d.p) + ", " +
                         std::to_string(d.q) + ")");
    }
    if (!std::isfinite(d.theta)) {
        throw InputError("number-diagonal angle must be finite");
    }
}

StateVector reference_state(int n) {
    if (n < 1) {
        throw InputError("reference state needs n >= 1, got " + std::to_string(n));
    }
    check_state_capacity(2 * n);
    // Modes n..2n-1 occupied.
    const uint64_t occupied = ((uint64_t{1} << n) - 1) << n;
    return StateVector::basis_state(2 * n, occupied);
}

void apply_givens_inplace(StateVector &s, const GivensGate &g) {
    validate(g, s.modes());
    const uint64_t bit_p = uint64_t{1} << g.p;
    const uint64_t bit_q = uint64_t{1} << g.q;
    const uint64_t between = (bit_q - 1) & ~((bit_p << 1) - 1);
    const double c = std::cos(g.theta);
    const double sn = std::sin(g.theta);
    auto amps = s.amplitudes();
    for (uint64_t x = 0; x < amps.size(); ++x) {
        // x runs over |0_p b 1_q>; its partner y is |1_p b 0_q>.
        if ((x & bit_p) || !(x & bit_q)) {
            continue;
        }
        const uint64_t y = x ^ bit_p ^ bit_q;
        const double sign = (std::popcount(x & between) & 1) ? -1.0 : 1.0;
        const Complex ax = amps[x];
        const Complex ay = amps[y];
        amps[x] = c * ax - sign * sn * ay;
        amps[y] = sign * sn * ax + c * ay;
    }
}

void apply_number_diagonal_inplace(StateVector &s, const NumberDiagonalGate &d) {
    validate(d, s.modes());
    const uint64_t mask = (uint64_t{1} << d.p) | (uint64_t{1} << d.q);
    const Complex phase = std::polar(1.0, d.theta);
    auto amps = s.amplitudes();
    for (uint64_t x = 0; x < amps.size(); ++x) {
        if ((x & mask) == mask) {
            amps[x] *= phase;
        }
    }
}

void apply_gate_inplace(StateVector &s, const FermionGate &gate) {
    std::visit(
        [&s](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, GivensGate>) {
                apply_givens_inplace(s, g);
            } else {
                apply_number_diagonal_inplace(s, g);
            }
        },
        gate);
}

StateVector apply_givens(StateVector s, const GivensGate &g) {
    apply_givens_inplace(s, g);
    return s;
}

StateVector apply_number_diagonal(StateVector s, const NumberDiagonalGate &d) {
    apply_number_diagonal_inplace(s, d);
    return s;
}

}  // namespace ucjiqp
