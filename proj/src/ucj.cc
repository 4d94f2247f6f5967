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

#include "ucjiqp/ucj.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ucjiqp/errors.h"

namespace ucjiqp {

namespace {

constexpr double kAntisymmetryTolerance = 1e-12;
constexpr double kOrthogonalityTolerance = 1e-8;
// Elimination angles below this are treated as already-zero entries.
constexpr double kNegligibleAngle = 1e-15;

std::vector<NumberDiagonalGate> sorted_diagonals(std::vector<NumberDiagonalGate> diagonal) {
    std::stable_sort(diagonal.begin(), diagonal.end(), [](const auto &a, const auto &b) {
        return std::pair(a.p, a.q) < std::pair(b.p, b.q);
    });
    return diagonal;
}

void check_square(const Eigen::MatrixXd &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InputError(std::string(what) + " must be a non-empty square matrix");
    }
}

}  // namespace

std::complex<double> UcjParams::jastrow(int p, int q) const {
    const int lo = std::min(p, q);
    const int hi = std::max(p, q);
    const double t = theta(lo, hi);
    return lo == hi ? std::complex<double>(0.0, t) : std::complex<double>(0.0, t / 2.0);
}

void Ucj1Compiled::validate() const {
    if (reference_n < 1) {
        throw InputError("reference_n must be >= 1");
    }
    if (modes != 2 * reference_n) {
        throw InputError("modes (" + std::to_string(modes) + ") must equal 2 * reference_n (" +
                         std::to_string(reference_n) + ")");
    }
    for (const GivensGate &g : givens) {
        ucjiqp::validate(g, modes);
    }
    for (const NumberDiagonalGate &d : diagonal) {
        ucjiqp::validate(d, modes);
    }
    if (!std::isfinite(global_phase)) {
        throw InputError("global_phase must be finite");
    }
}

std::vector<FermionGate> Ucj1Compiled::gate_sequence() const {
    std::vector<FermionGate> seq;
    seq.reserve(2 * givens.size() + diagonal.size());
    for (const GivensGate &g : givens) {
        seq.emplace_back(g);
    }
    for (const NumberDiagonalGate &d : sorted_diagonals(diagonal)) {
        seq.emplace_back(d);
    }
    for (auto it = givens.rbegin(); it != givens.rend(); ++it) {
        seq.emplace_back(it->adjoint());
    }
    return seq;
}

std::vector<GivensGate> givens_schedule_v(int n) {
    if (n < 1) {
        throw InputError("V schedule needs n >= 1");
    }
    std::vector<GivensGate> schedule;
    for (int a = n - 1; a >= 0; --a) {
        const double sign = (a % 2 == 0) ? -1.0 : 1.0;  // (-1)^{a+1}
        schedule.push_back({n - a - 1, n + a, sign * std::numbers::pi / 4.0});
    }
    return schedule;
}

StateVector simulate_ucj(const Ucj1Compiled &c, const StepObserver &observer) {
    c.validate();
    StateVector state = reference_state(c.reference_n);
    // With every diagonal angle zero the sandwich is exactly the identity;
    // skipping it avoids cos/sin rounding on the round trip.
    const bool identity = std::all_of(c.diagonal.begin(), c.diagonal.end(),
                                      [](const NumberDiagonalGate &d) { return d.theta == 0.0; });
    const std::vector<FermionGate> seq = identity ? std::vector<FermionGate>{} : c.gate_sequence();
    const size_t n_givens = c.givens.size();
    const size_t n_diag = c.diagonal.size();
    for (size_t i = 0; i < seq.size(); ++i) {
        if (observer) {
            UcjStep step{UcjStage::kForward, i, &seq[i]};
            if (i >= n_givens + n_diag) {
                step = {UcjStage::kReverse, i - n_givens - n_diag, &seq[i]};
            } else if (i >= n_givens) {
                step = {UcjStage::kDiagonal, i - n_givens, &seq[i]};
            }
            observer(step, state);
        }
        apply_gate_inplace(state, seq[i]);
    }
    if (observer) {
        observer({UcjStage::kDone, 0, nullptr}, state);
    }
    if (c.global_phase != 0.0) {
        state.scale(std::polar(1.0, c.global_phase));
    }
    return state;
}

Eigen::MatrixXd orbital_rotation_matrix(const Eigen::MatrixXd &k) {
    check_square(k, "K");
    if ((k + k.transpose()).cwiseAbs().maxCoeff() > kAntisymmetryTolerance) {
        throw InputError("K is not antisymmetric");
    }
    return k.exp();
}

Eigen::MatrixXd single_body_matrix(const GivensGate &g, int modes) {
    validate(g, modes);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(modes, modes);
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    m(g.p, g.p) = c;
    m(g.p, g.q) = s;
    m(g.q, g.p) = -s;
    m(g.q, g.q) = c;
    return m;
}

Eigen::MatrixXd schedule_matrix(const std::vector<GivensGate> &gates, int modes) {
    if (modes < 1) {
        throw InputError("schedule needs at least one mode");
    }
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(modes, modes);
    for (const GivensGate &g : gates) {
        q = single_body_matrix(g, modes) * q;
    }
    return q;
}

std::vector<GivensGate> decompose_givens(const Eigen::MatrixXd &q) {
    check_square(q, "Q");
    const int m = static_cast<int>(q.rows());
    const double orth_err = (q.transpose() * q - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (!(orth_err <= kOrthogonalityTolerance)) {
        throw InputError("Q is not orthogonal (max |Q^T Q - I| = " + std::to_string(orth_err) + ")");
    }
    if (q.determinant() < 0.0) {
        throw InputError("Q is a reflection (det = -1); only rotations have a Givens schedule");
    }

    // Left-multiply by rotations until the work matrix is the identity:
    // G_k ... G_1 Q = I, hence Q = G_1^T ... G_k^T.
    Eigen::MatrixXd work = q;
    std::vector<GivensGate> eliminations;
    for (int j = 0; j < m - 1; ++j) {
        for (int i = j + 1; i < m; ++i) {
            const double angle = std::atan2(work(i, j), work(j, j));
            if (std::abs(angle) < kNegligibleAngle) {
                continue;
            }
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            const Eigen::RowVectorXd row_j = work.row(j);
            const Eigen::RowVectorXd row_i = work.row(i);
            work.row(j) = c * row_j + s * row_i;
            work.row(i) = -s * row_j + c * row_i;
            eliminations.push_back({j, i, angle});
        }
    }

    std::vector<GivensGate> schedule;
    schedule.reserve(eliminations.size());
    for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
        schedule.push_back(it->adjoint());
    }
    return schedule;
}

RecoveredGenerator log_special_orthogonal(const Eigen::MatrixXd &q) {
    check_square(q, "Q");
    const Eigen::Index m = q.rows();
    Eigen::RealSchur<Eigen::MatrixXd> schur(q);
    const Eigen::MatrixXd &t = schur.matrixT();
    const Eigen::MatrixXd &z = schur.matrixU();

    // Q is normal, so T is block diagonal: 2x2 rotation blocks and +-1 entries.
    RecoveredGenerator out;
    Eigen::MatrixXd log_t = Eigen::MatrixXd::Zero(m, m);
    std::vector<Eigen::Index> minus_one;
    for (Eigen::Index i = 0; i < m;) {
        if (i + 1 < m && t(i + 1, i) != 0.0) {
            const double cos_part = 0.5 * (t(i, i) + t(i + 1, i + 1));
            const double sin_part = 0.5 * (t(i + 1, i) - t(i, i + 1));
            const double angle = std::atan2(sin_part, cos_part);
            if (std::numbers::pi - std::abs(angle) < 1e-12) {
                out.pi_ambiguous = true;
            }
            log_t(i + 1, i) = angle;
            log_t(i, i + 1) = -angle;
            i += 2;
        } else {
            if (t(i, i) < 0.0) {
                minus_one.push_back(i);
            }
            i += 1;
        }
    }
    if (minus_one.size() % 2 != 0) {
        throw InputError("matrix has an unpaired -1 eigenvalue; not special orthogonal");
    }
    // Each pair of -1 eigenvalues is a rotation by pi in their joint plane.
    for (size_t k = 0; k < minus_one.size(); k += 2) {
        const Eigen::Index a = minus_one[k];
        const Eigen::Index b = minus_one[k + 1];
        log_t(b, a) = std::numbers::pi;
        log_t(a, b) = -std::numbers::pi;
        out.pi_ambiguous = true;
    }
    const Eigen::MatrixXd k = z * log_t * z.transpose();
    out.k = 0.5 * (k - k.transpose());
    return out;
}

RecoveredGenerator recover_k(const std::vector<GivensGate> &gates, int modes) {
    return log_special_orthogonal(schedule_matrix(gates, modes));
}

UcjParams params_from_compiled(const Ucj1Compiled &c) {
    c.validate();
    UcjParams params;
    params.modes = c.modes;
    params.k = recover_k(c.givens, c.modes).k;
    params.theta = Eigen::MatrixXd::Zero(c.modes, c.modes);
    for (const NumberDiagonalGate &d : c.diagonal) {
        params.theta(d.p, d.q) += d.theta;
    }
    return params;
}

Ucj1Compiled compiled_from_params(const UcjParams &params, int reference_n) {
    Ucj1Compiled c;
    c.modes = params.modes;
    c.reference_n = reference_n;
    c.givens = decompose_givens(orbital_rotation_matrix(params.k));
    for (int p = 0; p < params.modes; ++p) {
        for (int q = p; q < params.modes; ++q) {
            if (params.theta(p, q) != 0.0) {
                c.diagonal.push_back({p, q, params.theta(p, q)});
            }
        }
    }
    c.validate();
    return c;
}

SpinEmbedding embed_full_spin(const Ucj1Compiled &up, const Ucj1Compiled &down) {
    up.validate();
    down.validate();
    if (up.reference_n != down.reference_n) {
        throw InputError("spin sectors must have the same n");
    }
    const int n = up.reference_n;
    const int sector = 2 * n;
    check_state_capacity(2 * sector);

    auto shifted = [sector](FermionGate gate) {
        std::visit(
            [sector](auto &g) {
                g.p += sector;
                g.q += sector;
            },
            gate);
        return gate;
    };

    std::vector<FermionGate> forward;
    for (const GivensGate &g : up.givens) {
        forward.emplace_back(g);
    }
    for (const GivensGate &g : down.givens) {
        forward.emplace_back(shifted(g));
    }
    std::vector<FermionGate> seq = forward;
    for (const NumberDiagonalGate &d : sorted_diagonals(up.diagonal)) {
        seq.emplace_back(d);
    }
    for (const NumberDiagonalGate &d : sorted_diagonals(down.diagonal)) {
        seq.emplace_back(shifted(d));
    }
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        seq.emplace_back(std::get<GivensGate>(*it).adjoint());
    }

    // Half filling in each sector: modes n..2n-1 and 3n..4n-1.
    const uint64_t half = ((uint64_t{1} << n) - 1) << n;
    StateVector state = StateVector::basis_state(2 * sector, half | (half << sector));
    for (const FermionGate &gate : seq) {
        apply_gate_inplace(state, gate);
    }
    state.scale(std::polar(1.0, up.global_phase + down.global_phase));

    StateVector up_state = simulate_ucj(up);
    StateVector down_state = simulate_ucj(down);
    const StateVector product = tensor_product(up_state, down_state);
    double residual = 0.0;
    for (uint64_t x = 0; x < state.dimension(); ++x) {
        residual = std::max(residual, std::abs(state[x] - product[x]));
    }
    return {std::move(state), std::move(up_state), std::move(down_state), residual};
}

}  // namespace ucjiqp
