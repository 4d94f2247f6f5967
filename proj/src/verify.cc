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

#include "ucjiqp/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

#include "ucjiqp/errors.h"
#include "ucjiqp/rng.h"

namespace ucjiqp {

namespace {

constexpr uint64_t kSamplingStream = 0x53414d50;  // "SAMP"

void check_widths(const Distribution &p, const Distribution &q) {
    if (p.width() != q.width()) {
        throw InputError("distribution widths differ: " + std::to_string(p.width()) + " vs " +
                         std::to_string(q.width()));
    }
}

std::set<std::string> union_keys(const Distribution &p, const Distribution &q) {
    std::set<std::string> keys;
    for (const auto &[bits, prob] : p.entries()) {
        keys.insert(bits);
    }
    for (const auto &[bits, prob] : q.entries()) {
        keys.insert(bits);
    }
    return keys;
}

}  // namespace

double linf_distance(const Distribution &p, const Distribution &q) {
    check_widths(p, q);
    double out = 0.0;
    for (const std::string &bits : union_keys(p, q)) {
        out = std::max(out, std::abs(p.at(bits) - q.at(bits)));
    }
    return out;
}

double total_variation_distance(const Distribution &p, const Distribution &q) {
    check_widths(p, q);
    double sum = 0.0;
    for (const std::string &bits : union_keys(p, q)) {
        sum += std::abs(p.at(bits) - q.at(bits));
    }
    return std::min(1.0, 0.5 * sum);
}

double multiplicative_error(const Distribution &p, const Distribution &q, double zero_threshold) {
    check_widths(p, q);
    double c = 1.0;
    for (const std::string &bits : union_keys(p, q)) {
        double a = p.at(bits);
        double b = q.at(bits);
        a = a < zero_threshold ? 0.0 : a;
        b = b < zero_threshold ? 0.0 : b;
        if (a == 0.0 && b == 0.0) {
            continue;
        }
        if (a == 0.0 || b == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        c = std::max(c, std::max(a / b, b / a));
    }
    return c;
}

StateComparison compare_states(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw InputError("cannot compare states of different dimension");
    }
    Complex overlap = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (uint64_t x = 0; x < a.dimension(); ++x) {
        overlap += std::conj(a[x]) * b[x];
        norm_a += std::norm(a[x]);
        norm_b += std::norm(b[x]);
    }
    if (std::abs(overlap) == 0.0) {
        return {std::nullopt, std::sqrt(norm_a + norm_b)};
    }
    const double phase = std::arg(overlap);
    const Complex undo = std::polar(1.0, -phase);
    double residual = 0.0;
    for (uint64_t x = 0; x < a.dimension(); ++x) {
        residual += std::norm(a[x] - undo * b[x]);
    }
    return {phase, std::sqrt(residual)};
}

std::map<std::string, uint64_t> sample(const Distribution &d, uint64_t shots, uint64_t seed) {
    std::map<std::string, uint64_t> counts;
    if (shots == 0) {
        return counts;
    }
    if (d.entries().empty()) {
        throw InputError("cannot sample from an empty distribution");
    }
    std::vector<const std::string *> keys;
    std::vector<double> cdf;
    double running = 0.0;
    for (const auto &[bits, p] : d.entries()) {
        if (p < 0.0) {
            throw InputError("negative probability for outcome '" + bits + "'");
        }
        running += p;
        keys.push_back(&bits);
        cdf.push_back(running);
    }
    for (uint64_t shot = 0; shot < shots; ++shot) {
        const double u = Philox4x32::uniform(seed, kSamplingStream, shot) * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const size_t k = std::min(static_cast<size_t>(it - cdf.begin()), keys.size() - 1);
        ++counts[*keys[k]];
    }
    return counts;
}

double subspace_leak(const StateVector &s, const PairEncoding &enc) {
    if (s.modes() != enc.modes()) {
        throw InputError("state width does not match the pair encoding");
    }
    double leak = 0.0;
    for (uint64_t x = 0; x < s.dimension(); ++x) {
        if (!enc.decode_index(x)) {
            leak = std::max(leak, std::abs(s[x]));
        }
    }
    return leak;
}

double wrap_angle(double angle) {
    double r = std::remainder(angle, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r += 2.0 * std::numbers::pi;
    }
    return r;
}

VerifyReport verify_pair(const IqpCircuit &iqp, const Ucj1Compiled &ucj, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw InputError("tolerance must be positive");
    }
    ucj.validate();
    if (ucj.reference_n != iqp.n()) {
        throw InputError("IQP circuit has n=" + std::to_string(iqp.n()) + " but the UCJ circuit has reference_n=" +
                         std::to_string(ucj.reference_n));
    }
    const PairEncoding enc(iqp.n());
    const StateVector target = iqp_state(iqp);
    const Distribution expected = distribution_of(target);

    Ucj1Compiled untracked = ucj;
    untracked.global_phase = 0.0;
    const StateVector raw = simulate_ucj(untracked);
    StateVector tracked = raw;
    tracked.scale(std::polar(1.0, ucj.global_phase));

    // Decode without renormalizing so leakage is reported, never hidden.
    const Distribution full = distribution_of(tracked);
    Distribution decoded(enc.n());
    VerifyReport report;
    report.tolerance = tolerance;
    for (const auto &[bits, p] : full.entries()) {
        if (auto d = decode_outcome(bits, enc)) {
            decoded.add(*d, p);
        } else {
            report.leakage += p;
        }
    }

    report.linf = linf_distance(expected, decoded);
    report.tvd = total_variation_distance(expected, decoded);
    report.mult_error = multiplicative_error(expected, decoded);
    report.phase = compare_states(decode_state(raw, enc), target).phase;
    report.state_residual = compare_states(decode_state(tracked, enc), target).residual;
    report.pass = report.leakage < kLeakageThreshold && report.linf <= tolerance;
    return report;
}

}  // namespace ucjiqp
