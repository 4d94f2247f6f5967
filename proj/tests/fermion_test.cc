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
#include <numbers>

#include <gtest/gtest.h>

#include "ucjiqp/errors.h"
#include "ucjiqp/fock_oracle.h"
#include "ucjiqp/probes.h"

namespace ucjiqp {
namespace {

constexpr double kPi = std::numbers::pi;

double linf(const StateVector &a, const StateVector &b) {
    double out = 0.0;
    for (uint64_t x = 0; x < a.dimension(); ++x) {
        out = std::max(out, std::abs(a[x] - b[x]));
    }
    return out;
}

StateVector basis(std::string_view bits) {
    return StateVector::basis_state(static_cast<int>(bits.size()), bits_to_index(bits));
}

TEST(ReferenceState, HalfFilling) {
    EXPECT_EQ(reference_state(1), basis("01"));
    EXPECT_EQ(reference_state(2), basis("0011"));
    EXPECT_EQ(reference_state(3), basis("000111"));
    EXPECT_THROW(reference_state(0), InputError);
    EXPECT_THROW(reference_state(kMaxStateModes), CapacityError);
}

TEST(ApplyGivens, ZeroAngleIsIdentity) {
    CounterStream rng(5, 0);
    const StateVector s = random_state(4, rng);
    EXPECT_EQ(apply_givens(s, {0, 3, 0.0}), s);
}

TEST(ApplyGivens, AdjacentModesQuarterTurn) {
    const StateVector out = apply_givens(basis("01"), {0, 1, kPi / 4});
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(out[bits_to_index("01")] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out[bits_to_index("10")] - r), 0.0, 1e-15);
}

TEST(ApplyGivens, InterveningParitySign) {
    const double theta = 0.37;
    const StateVector out = apply_givens(basis("011"), {0, 2, theta});
    EXPECT_NEAR(std::abs(out[bits_to_index("011")] - std::cos(theta)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out[bits_to_index("110")] + std::sin(theta)), 0.0, 1e-15);
}

TEST(ApplyGivens, LeavesEqualOccupationsAlone) {
    for (const char *bits : {"0000", "1001", "0110", "1111"}) {
        EXPECT_EQ(apply_givens(basis(bits), {0, 3, 1.1}), basis(bits)) << bits;
    }
}

TEST(ApplyNumberDiagonal, Examples) {
    CounterStream rng(9, 0);
    const StateVector s = random_state(3, rng);
    EXPECT_EQ(apply_number_diagonal(s, {0, 2, 0.0}), s);

    const double theta = 0.8;
    const StateVector one = apply_number_diagonal(basis("1"), {0, 0, theta});
    EXPECT_NEAR(std::abs(one[1] - std::polar(1.0, theta)), 0.0, 1e-15);

    const double r = 1.0 / std::sqrt(2.0);
    StateVector two(2, {0.0, 0.0, r, r});  // (|01> + |11>)/sqrt2
    two = apply_number_diagonal(two, {0, 1, theta});
    EXPECT_NEAR(std::abs(two[bits_to_index("01")] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(two[bits_to_index("11")] - r * std::polar(1.0, theta)), 0.0, 1e-15);
}

TEST(Gates, RejectBadIndices) {
    StateVector s(3);
    EXPECT_THROW(apply_givens_inplace(s, {0, 3, 0.1}), InputError);
    EXPECT_THROW(apply_givens_inplace(s, {1, 1, 0.1}), InputError);
    EXPECT_THROW(apply_givens_inplace(s, {2, 1, 0.1}), InputError);
    EXPECT_THROW(apply_givens_inplace(s, {-1, 1, 0.1}), InputError);
    EXPECT_THROW(apply_givens_inplace(s, {0, 1, NAN}), InputError);
    EXPECT_THROW(apply_number_diagonal_inplace(s, {2, 1, 0.1}), InputError);
    EXPECT_THROW(apply_number_diagonal_inplace(s, {0, 3, 0.1}), InputError);
    EXPECT_NO_THROW(apply_number_diagonal_inplace(s, {1, 1, 0.1}));
}

TEST(JwDenseLadder, SingleMode) {
    const Eigen::MatrixXcd a = jw_dense_ladder(0, 1);
    Eigen::MatrixXcd expected(2, 2);
    expected << 0, 1, 0, 0;
    EXPECT_EQ(a, expected);
}

TEST(JwDenseLadder, NumberOperatorIsBitDiagonal) {
    const Eigen::MatrixXcd a0 = jw_dense_ladder(0, 2);
    const Eigen::MatrixXcd n0 = a0.adjoint() * a0;
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected.diagonal() << 0, 1, 0, 1;
    EXPECT_LT((n0 - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JwDenseLadder, CanonicalAnticommutation) {
    for (int m = 1; m <= 6; ++m) {
        const Eigen::Index dim = Eigen::Index{1} << m;
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
        for (int p = 0; p < m; ++p) {
            const Eigen::MatrixXcd ap = jw_dense_ladder(p, m);
            for (int q = 0; q < m; ++q) {
                const Eigen::MatrixXcd aq = jw_dense_ladder(q, m);
                const Eigen::MatrixXcd aa = ap * aq + aq * ap;
                const Eigen::MatrixXcd aad = ap * aq.adjoint() + aq.adjoint() * ap;
                EXPECT_LT(aa.cwiseAbs().maxCoeff(), 1e-12);
                EXPECT_LT((aad - (p == q ? id : Eigen::MatrixXcd::Zero(dim, dim))).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(JwDenseLadder, CapEnforced) {
    EXPECT_THROW(jw_dense_ladder(0, kOracleMaxModes + 1), CapacityError);
    EXPECT_THROW(jw_dense_ladder(3, 3), InputError);
}

TEST(FockOracle, EmptyListIsIdentity) {
    const Eigen::MatrixXcd u = fock_oracle_unitary({}, 3);
    EXPECT_EQ(u, Eigen::MatrixXcd::Identity(8, 8));
}

TEST(FockOracle, GivensAgreesWithKernel) {
    const std::vector<FermionGate> gates = {GivensGate{0, 1, kPi / 4}};
    const Eigen::VectorXcd dense = fock_oracle_unitary(gates, 2) * to_eigen(basis("01"));
    const StateVector kernel = apply_givens(basis("01"), {0, 1, kPi / 4});
    for (uint64_t x = 0; x < 4; ++x) {
        EXPECT_LT(std::abs(dense(static_cast<Eigen::Index>(x)) - kernel[x]), 1e-12);
    }
}

TEST(FockOracle, NumberDiagonalMatrix) {
    const double theta = 1.3;
    const std::vector<FermionGate> gates = {NumberDiagonalGate{0, 1, theta}};
    const Eigen::MatrixXcd u = fock_oracle_unitary(gates, 2);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4);
    expected(3, 3) = std::polar(1.0, theta);
    EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-12);
}

// On the slice |0_p b 0_q>, |0_p b 1_q>, |1_p b 0_q>, |1_p b 1_q> with the
// intervening bits b held fixed, R_pq is the 4x4 Givens matrix carrying
// (-1)^{w(b)}. Checked on the oracle, independent of the kernel.
TEST(FockOracle, GivensMatrixOnFixedInterveningBits) {
    const int m = 5;
    const int p = 0;
    const int q = 4;
    const double theta = 0.61;
    const std::vector<FermionGate> gates = {GivensGate{p, q, theta}};
    const Eigen::MatrixXcd u = fock_oracle_unitary(gates, m);
    for (uint64_t b = 0; b < 8; ++b) {
        const uint64_t mid = b << 1;
        const double sign = (std::popcount(b) % 2) ? -1.0 : 1.0;
        const Eigen::Index s01 = static_cast<Eigen::Index>(mid | (1u << q));
        const Eigen::Index s10 = static_cast<Eigen::Index>(mid | (1u << p));
        const Eigen::Index s00 = static_cast<Eigen::Index>(mid);
        const Eigen::Index s11 = static_cast<Eigen::Index>(mid | (1u << p) | (1u << q));
        EXPECT_NEAR(std::abs(u(s01, s01) - std::cos(theta)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u(s01, s10) + sign * std::sin(theta)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u(s10, s01) - sign * std::sin(theta)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u(s10, s10) - std::cos(theta)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u(s00, s00) - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u(s11, s11) - 1.0), 0.0, 1e-12);
    }
}

TEST(KernelOracleEquivalence, RandomSequences) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        const int modes = 2 + static_cast<int>(seed % 5);
        const int gates = static_cast<int>(seed % 21);
        const OracleCheckResult r = oracle_check(modes, gates, seed);
        ASSERT_LT(r.gap, 1e-10) << "seed " << seed;
        ASSERT_LT(r.oracle_unitarity, 1e-10) << "seed " << seed;
    }
}

TEST(Kernels, ConserveParticleNumberAndNorm) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        CounterStream rng(seed, 1);
        const int modes = 2 + static_cast<int>(seed % 5);
        const int weight = static_cast<int>(rng.below(static_cast<uint64_t>(modes) + 1));
        StateVector s = random_state(modes, rng);
        // Restrict to one particle-number sector.
        for (uint64_t x = 0; x < s.dimension(); ++x) {
            if (std::popcount(x) != weight) {
                s[x] = 0.0;
            }
        }
        s.scale(1.0 / s.norm());
        for (const FermionGate &g : random_gate_sequence(modes, 20, rng)) {
            apply_gate_inplace(s, g);
            ASSERT_NEAR(s.norm(), 1.0, 1e-12);
        }
        for (uint64_t x = 0; x < s.dimension(); ++x) {
            if (std::popcount(x) != weight) {
                ASSERT_EQ(s[x], Complex(0.0)) << "seed " << seed;
            }
        }
    }
}

TEST(Kernels, GivensAdjointUndoes) {
    CounterStream rng(77, 0);
    const StateVector s = random_state(5, rng);
    const GivensGate g{1, 4, 0.9};
    EXPECT_LT(linf(apply_givens(apply_givens(s, g), g.adjoint()), s), 1e-15);
}

}  // namespace
}  // namespace ucjiqp
