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

#ifndef UCJIQP_VERIFY_H
#define UCJIQP_VERIFY_H

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ucjiqp/compile.h"
#include "ucjiqp/distribution.h"
#include "ucjiqp/iqp.h"
#include "ucjiqp/state_vector.h"
#include "ucjiqp/ucj.h"

namespace ucjiqp {

/// Probabilities below this count as exact zeros in multiplicative_error.
inline constexpr double kDefaultZeroThreshold = 1e-14;

/// Classical simulators achieving c below this would collapse the
/// polynomial hierarchy. Reported for context only.
inline const double kHardnessThreshold = std::sqrt(2.0);

struct VerifyReport {
    double linf = 0.0;
    double tvd = 0.0;
    double mult_error = 1.0;
    /// phi with iqp_state = e^{i phi} * (decoded compiled state without its
    /// tracked global phase); absent when the states are orthogonal.
    std::optional<double> phase;
    /// Phase-aligned residual between the decoded compiled state (tracked
    /// phase included) and the IQP state.
    double state_residual = 0.0;
    double leakage = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// max_x |p(x) - q(x)| over the union of supports.
double linf_distance(const Distribution &p, const Distribution &q);
/// (1/2) sum_x |p(x) - q(x)|.
double total_variation_distance(const Distribution &p, const Distribution &q);

/// Smallest c >= 1 with p/c <= q <= c p pointwise; infinity when the
/// supports differ.
double multiplicative_error(const Distribution &p, const Distribution &q,
                            double zero_threshold = kDefaultZeroThreshold);

struct StateComparison {
    std::optional<double> phase;  // arg <a|b>
    double residual;              // || a - e^{-i phase} b ||_2
};

StateComparison compare_states(const StateVector &a, const StateVector &b);

/// Inverse-CDF sampling over the keys in lexicographic order. Shot i uses
/// the Philox draw keyed by (seed, i) alone.
std::map<std::string, uint64_t> sample(const Distribution &d, uint64_t shots, uint64_t seed);

/// Largest |amplitude| on a basis state outside the pair-coded subspace.
double subspace_leak(const StateVector &s, const PairEncoding &enc);

VerifyReport verify_pair(const IqpCircuit &iqp, const Ucj1Compiled &ucj, double tolerance);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

}  // namespace ucjiqp

#endif
