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

#include "ucjiqp/probes.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "ucjiqp/compile.h"
#include "ucjiqp/errors.h"
#include "ucjiqp/fock_oracle.h"
#include "ucjiqp/ucj.h"
#include "ucjiqp/verify.h"

namespace ucjiqp {

namespace {

constexpr double kPi = std::numbers::pi;

// Distinct streams keep the instance generator, the gate generator and the
// sampler from sharing counters under one seed.
constexpr uint64_t kIqpStream = 0x49515030;     // "IQP0"
constexpr uint64_t kGateStream = 0x47415445;    // "GATE"
constexpr uint64_t kStateStream = 0x53544154;   // "STAT"

uint64_t trial_seed(uint64_t seed, int trial) {
    // splitmix64 finalizer
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

IqpCircuit random_iqp(int n, uint64_t seed, double density) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InputError("density must lie in [0, 1]");
    }
    IqpCircuit c(n);
    CounterStream rng(seed, kIqpStream);
    for (int a = 0; a < n; ++a) {
        c.set_field(a, rng.uniform_left_open(-kPi, kPi));
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool include = rng.uniform() < density;
            const double w = rng.uniform_left_open(-kPi, kPi);
            if (include) {
                c.set_coupling(a, b, w);
            }
        }
    }
    return c;
}

std::vector<FermionGate> random_gate_sequence(int modes, int count, CounterStream &rng) {
    if (modes < 2) {
        throw InputError("random gate sequences need at least two modes");
    }
    std::vector<FermionGate> gates;
    for (int k = 0; k < count; ++k) {
        const bool givens = rng.uniform() < 0.5;
        int p = static_cast<int>(rng.below(static_cast<uint64_t>(modes)));
        int q = static_cast<int>(rng.below(static_cast<uint64_t>(modes)));
        const double theta = rng.uniform_left_open(-kPi, kPi);
        if (givens) {
            if (p == q) {
                q = (p + 1) % modes;
            }
            gates.emplace_back(GivensGate{std::min(p, q), std::max(p, q), theta});
        } else {
            gates.emplace_back(NumberDiagonalGate{std::min(p, q), std::max(p, q), theta});
        }
    }
    return gates;
}

StateVector random_state(int modes, CounterStream &rng) {
    check_state_capacity(modes);
    std::vector<Complex> amps(uint64_t{1} << modes);
    double norm = 0.0;
    for (Complex &a : amps) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm);
    for (Complex &a : amps) {
        a *= inv;
    }
    return StateVector(modes, std::move(amps));
}

TraceProbe trace_compiled(const IqpCircuit &c) {
    const Ucj1Compiled compiled = compile_iqp(c);
    const int n = c.n();
    const PairEncoding enc(n);
    TraceProbe probe;
    auto observer = [&](const UcjStep &step, const StateVector &s) {
        probe.max_leak = std::max(probe.max_leak, subspace_leak(s, enc));
        probe.max_norm_error = std::max(probe.max_norm_error, std::abs(s.norm() - 1.0));
        for (uint64_t x = 0; x < s.dimension(); ++x) {
            if (s[x] != Complex{0.0, 0.0} && std::popcount(x) != n) {
                probe.particle_number_ok = false;
            }
        }
        if (step.stage != UcjStage::kForward && step.stage != UcjStage::kReverse) {
            return;
        }
        // Before V_a (or its adjoint) the block strictly inside the pair
        // (n-a-1, n+a) must hold exactly a particles on every supported state.
        const auto &g = std::get<GivensGate>(*step.gate);
        const int a = n - 1 - g.p;
        const uint64_t between = ((uint64_t{1} << g.q) - 1) & ~((uint64_t{1} << (g.p + 1)) - 1);
        ++probe.parity_checks;
        for (uint64_t x = 0; x < s.dimension(); ++x) {
            if (s[x] != Complex{0.0, 0.0} && std::popcount(x & between) != a) {
                probe.parity_ok = false;
            }
        }
    };
    simulate_ucj(compiled, observer);
    return probe;
}

std::vector<PropertyTally> check_invariants(int n, uint64_t seed, int trials) {
    if (trials < 1) {
        throw InputError("trials must be >= 1");
    }
    std::vector<PropertyTally> tallies = {
        {"subspace_leakage<1e-12"},      {"intervening_parity==alpha"}, {"particle_number==n"},
        {"norm_drift<1e-12"},            {"distribution_linf<1e-10"},   {"mult_error<1+1e-8"},
        {"state_residual<1e-10"},        {"phase==global_phase"},       {"diagonals_p<=q"},
        {"v_schedule_permutation<1e-12"},
    };
    auto record = [&tallies](size_t k, bool ok, double value) {
        ++tallies[k].trials;
        tallies[k].passed += ok ? 1 : 0;
        tallies[k].worst = std::max(tallies[k].worst, value);
    };

    for (int t = 0; t < trials; ++t) {
        const IqpCircuit c = random_iqp(n, trial_seed(seed, t));
        const TraceProbe probe = trace_compiled(c);
        record(0, probe.max_leak < 1e-12, probe.max_leak);
        record(1, probe.parity_ok && probe.parity_checks == 2 * n, 0.0);
        record(2, probe.particle_number_ok, 0.0);
        record(3, probe.max_norm_error < 1e-12, probe.max_norm_error);

        const Ucj1Compiled compiled = compile_iqp(c);
        const VerifyReport report = verify_pair(c, compiled, 1e-10);
        record(4, report.linf < 1e-10 && report.leakage < 1e-12, report.linf);
        record(5, report.mult_error < 1.0 + 1e-8, report.mult_error - 1.0);
        record(6, report.state_residual < 1e-10, report.state_residual);
        const double phase_gap =
            report.phase ? std::abs(wrap_angle(*report.phase - compiled.global_phase)) : kPi;
        record(7, phase_gap < 1e-10, phase_gap);
        const bool ordered = std::all_of(compiled.diagonal.begin(), compiled.diagonal.end(),
                                         [](const NumberDiagonalGate &d) { return d.p <= d.q; });
        record(8, ordered, 0.0);

        Ucj1Compiled permuted = compiled;
        std::reverse(permuted.givens.begin(), permuted.givens.end());
        const StateVector s0 = simulate_ucj(compiled);
        const StateVector s1 = simulate_ucj(permuted);
        double gap = 0.0;
        for (uint64_t x = 0; x < s0.dimension(); ++x) {
            gap = std::max(gap, std::abs(s0[x] - s1[x]));
        }
        record(9, gap < 1e-12, gap);
    }
    return tallies;
}

OracleCheckResult oracle_check(int modes, int gates, uint64_t seed) {
    if (modes < 2 || modes > kOracleMaxModes) {
        if (modes > kOracleMaxModes) {
            throw CapacityError("oracle check is capped at " + std::to_string(kOracleMaxModes) + " modes");
        }
        throw InputError("oracle check needs at least two modes");
    }
    if (gates < 0) {
        throw InputError("gate count must be non-negative");
    }
    CounterStream gate_rng(seed, kGateStream);
    CounterStream state_rng(seed, kStateStream);
    const std::vector<FermionGate> seq = random_gate_sequence(modes, gates, gate_rng);
    const StateVector input = random_state(modes, state_rng);

    StateVector kernel = input;
    for (const FermionGate &g : seq) {
        apply_gate_inplace(kernel, g);
    }
    const Eigen::MatrixXcd u = fock_oracle_unitary(seq, modes);
    const Eigen::VectorXcd dense = u * to_eigen(input);

    OracleCheckResult out{modes, gates, 0.0, 0.0};
    for (uint64_t x = 0; x < kernel.dimension(); ++x) {
        out.gap = std::max(out.gap, std::abs(kernel[x] - dense(static_cast<Eigen::Index>(x))));
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    out.oracle_unitarity = (u.adjoint() * u - id).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace ucjiqp
