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

#include "ucjiqp/compile.h"

#include <bit>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ucjiqp/errors.h"
#include "ucjiqp/fock_oracle.h"
#include "ucjiqp/probes.h"
#include "ucjiqp/verify.h"

namespace ucjiqp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCos2 = 0.8535533905932737;
constexpr double kSin2 = 0.14644660940672624;

IqpCircuit single_coupling(double w) {
    IqpCircuit c(2);
    c.set_coupling(0, 1, w);
    return c;
}

TEST(CompileIqp, AllZeroCircuit) {
    const Ucj1Compiled c = compile_iqp(IqpCircuit(3));
    for (const NumberDiagonalGate &d : c.diagonal) {
        EXPECT_EQ(d.theta, 0.0);
    }
    const StateVector s = simulate_ucj(c);
    const StateVector ref = reference_state(3);
    for (uint64_t x = 0; x < s.dimension(); ++x) {
        EXPECT_LT(std::abs(s[x] - ref[x]), 1e-15);
    }
}

TEST(CompileIqp, SingleField) {
    IqpCircuit iqp(1);
    iqp.set_field(0, kPi / 8);
    const Ucj1Compiled c = compile_iqp(iqp);
    EXPECT_EQ(c.modes, 2);
    EXPECT_EQ(c.reference_n, 1);
    EXPECT_EQ(c.givens, (std::vector<GivensGate>{{0, 1, -kPi / 4}}));
    EXPECT_EQ(c.diagonal, (std::vector<NumberDiagonalGate>{{0, 0, -kPi / 8}, {1, 1, kPi / 8}}));
    EXPECT_EQ(c.global_phase, 0.0);

    const DecodedDistribution d = decode_distribution(distribution_of(simulate_ucj(c)));
    EXPECT_NEAR(d.distribution.at("0"), kCos2, 1e-14);
    EXPECT_NEAR(d.distribution.at("1"), kSin2, 1e-14);
}

TEST(CompileIqp, SingleCoupling) {
    const Ucj1Compiled c = compile_iqp(single_coupling(kPi / 8));
    const std::vector<NumberDiagonalGate> expected = {
        {0, 0, -kPi / 8}, {0, 1, kPi / 2}, {1, 1, -kPi / 8}, {2, 2, kPi / 8}, {3, 3, kPi / 8}};
    ASSERT_EQ(c.diagonal.size(), expected.size());
    for (size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(c.diagonal[k].p, expected[k].p);
        EXPECT_EQ(c.diagonal[k].q, expected[k].q);
        EXPECT_DOUBLE_EQ(c.diagonal[k].theta, expected[k].theta);
    }
    EXPECT_DOUBLE_EQ(c.global_phase, -kPi / 8);

    const DecodedDistribution d = decode_distribution(distribution_of(simulate_ucj(c)));
    EXPECT_NEAR(d.distribution.at("00"), kCos2, 1e-14);
    EXPECT_NEAR(d.distribution.at("11"), kSin2, 1e-14);
    EXPECT_LT(d.leakage, 1e-14);
}

TEST(CompileIqp, DiagonalsRespectOrdering) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Ucj1Compiled c = compile_iqp(random_iqp(1 + static_cast<int>(seed % 6), seed, 0.6));
        EXPECT_EQ(c.givens, givens_schedule_v(c.reference_n));
        for (size_t k = 0; k < c.diagonal.size(); ++k) {
            EXPECT_LE(c.diagonal[k].p, c.diagonal[k].q);
            if (k > 0) {
                EXPECT_LE(std::pair(c.diagonal[k - 1].p, c.diagonal[k - 1].q),
                          std::pair(c.diagonal[k].p, c.diagonal[k].q));
            }
        }
    }
}

// F(-2v') = D_uu(-v') D_ll(+v') restricted to (|0_u 1_l>, |1_u 0_l>) must be
// diag(e^{iv'}, e^{-iv'}) = exp(i v' Zbar). Modes u = 0, l = 1 of a 2-mode register.
TEST(AngleConversion, FieldGadgetMatchesExpIZ) {
    for (double v : {0.0, 0.3, -1.2, kPi / 8, 2.9}) {
        const std::vector<FermionGate> gadget = {NumberDiagonalGate{0, 0, -v}, NumberDiagonalGate{1, 1, v}};
        const Eigen::MatrixXcd u = fock_oracle_unitary(gadget, 2);
        const Eigen::Index zero_bar = static_cast<Eigen::Index>(bits_to_index("01"));
        const Eigen::Index one_bar = static_cast<Eigen::Index>(bits_to_index("10"));
        EXPECT_LT(std::abs(u(zero_bar, zero_bar) - std::polar(1.0, v)), 1e-12);
        EXPECT_LT(std::abs(u(one_bar, one_bar) - std::polar(1.0, -v)), 1e-12);
        EXPECT_LT(std::abs(u(zero_bar, one_bar)), 1e-12);
    }
}

// D_{n-b-1, n-a-1}(4w) on the four coded states of qubits (a, b) = (0, 1),
// n = 2, must equal exp[i w (I - Z)(I - Z)]: phase e^{4iw} only on |1bar 1bar>.
TEST(AngleConversion, CouplingGadgetMatchesControlledPhase) {
    const PairEncoding enc(2);
    for (double w : {0.25, -0.7, kPi / 8}) {
        const std::vector<FermionGate> gadget = {NumberDiagonalGate{enc.upper(1), enc.upper(0), 4 * w}};
        const Eigen::MatrixXcd u = fock_oracle_unitary(gadget, 4);
        for (uint64_t qubits = 0; qubits < 4; ++qubits) {
            const Eigen::Index x = static_cast<Eigen::Index>(enc.encode_index(qubits));
            const double zz_weight = (qubits == 3) ? 4.0 : 0.0;  // (1 - z_a)(1 - z_b)
            EXPECT_LT(std::abs(u(x, x) - std::polar(1.0, w * zz_weight)), 1e-12);
        }
    }
}

TEST(PairEncoding, EncodeDecodeInverse) {
    for (int n = 1; n <= 6; ++n) {
        const PairEncoding enc(n);
        for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
            const uint64_t modes_index = enc.encode_index(x);
            EXPECT_EQ(std::popcount(modes_index), n);
            EXPECT_EQ(enc.decode_index(modes_index), x);
        }
        EXPECT_EQ(enc.encode_index(0), bits_to_index(std::string(n, '0') + std::string(n, '1')));
    }
    EXPECT_THROW(PairEncoding(0), InputError);
}

TEST(DecodeOutcome, Examples) {
    const PairEncoding enc(2);
    EXPECT_EQ(decode_outcome("0011", enc), "00");
    EXPECT_EQ(decode_outcome("0101", enc), "10");
    EXPECT_EQ(decode_outcome("0110", enc), std::nullopt);
    EXPECT_EQ(decode_outcome("0000", enc), std::nullopt);
    EXPECT_THROW(decode_outcome("011", enc), InputError);
}

TEST(DecodeDistribution, Examples) {
    Distribution point(4);
    point.add("0011", 1.0);
    const DecodedDistribution d = decode_distribution(point);
    EXPECT_EQ(d.distribution.at("00"), 1.0);
    EXPECT_EQ(d.leakage, 0.0);

    Distribution vacuum(4);
    vacuum.add("0000", 1.0);
    try {
        decode_distribution(vacuum);
        FAIL() << "expected LeakageError";
    } catch (const LeakageError &e) {
        EXPECT_EQ(e.leakage(), 1.0);
    }

    Distribution odd(3);
    odd.add("001", 1.0);
    EXPECT_THROW(decode_distribution(odd), InputError);
}

TEST(DecodeDistribution, SmallLeakageIsRenormalized) {
    Distribution d(2);
    d.add("01", 1.0 - 1e-11);
    d.add("00", 1e-11);
    const DecodedDistribution out = decode_distribution(d);
    EXPECT_NEAR(out.leakage, 1e-11, 1e-20);
    EXPECT_DOUBLE_EQ(out.distribution.at("0"), 1.0);
}

TEST(EndToEnd, DistributionsMatchIqp) {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 1 + static_cast<int>(seed % 6);
        const IqpCircuit iqp = random_iqp(n, seed);
        const DecodedDistribution d = decode_distribution(distribution_of(simulate_ucj(compile_iqp(iqp))));
        const Distribution expected = iqp_distribution(iqp);
        EXPECT_LT(linf_distance(d.distribution, expected), 1e-10) << "seed " << seed;
        EXPECT_LT(d.leakage, 1e-12);
    }
}

TEST(EndToEnd, StateMatchesIqpWithTrackedPhase) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 5);
        const IqpCircuit iqp = random_iqp(n, seed);
        const Ucj1Compiled c = compile_iqp(iqp);
        const PairEncoding enc(n);
        const StateVector decoded = decode_state(simulate_ucj(c), enc);
        const StateVector target = iqp_state(iqp);
        for (uint64_t x = 0; x < target.dimension(); ++x) {
            ASSERT_LT(std::abs(decoded[x] - target[x]), 1e-10) << "seed " << seed;
        }
    }
}

TEST(EndToEnd, ControlTargetSymmetry) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const IqpCircuit base = random_iqp(3, seed);
        IqpCircuit swapped(3, base.fields(), {});
        for (const auto &[key, w] : base.couplings()) {
            swapped.set_coupling(key.second, key.first, w);
        }
        const Ucj1Compiled a = compile_iqp(base);
        const Ucj1Compiled b = compile_iqp(swapped);
        EXPECT_EQ(a.diagonal, b.diagonal);
        const auto sa = a.gate_sequence();
        const auto sb = b.gate_sequence();
        EXPECT_LT((fock_oracle_unitary(sa, 6) - fock_oracle_unitary(sb, 6)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

}  // namespace
}  // namespace ucjiqp
