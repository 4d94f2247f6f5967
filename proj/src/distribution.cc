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

#include "ucjiqp/distribution.h"

#include "ucjiqp/errors.h"

namespace ucjiqp {

double Distribution::at(const std::string &bits) const {
    auto it = probs_.find(bits);
    return it == probs_.end() ? 0.0 : it->second;
}

void Distribution::add(const std::string &bits, double p) {
    if (static_cast<int>(bits.size()) != width_) {
        throw InputError("outcome '" + bits + "' does not have width " + std::to_string(width_));
    }
    probs_[bits] += p;
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto &[bits, p] : probs_) {
        sum += p;
    }
    return sum;
}

void Distribution::normalize() {
    const double sum = total();
    if (sum <= 0.0) {
        throw InputError("cannot normalize an empty distribution");
    }
    for (auto &[bits, p] : probs_) {
        p /= sum;
    }
}

Distribution distribution_of(const StateVector &state) {
    Distribution d(state.modes());
    for (uint64_t x = 0; x < state.dimension(); ++x) {
        const double p = std::norm(state[x]);
        if (p > kProbabilityFloor) {
            d.add(index_to_bits(x, state.modes()), p);
        }
    }
    return d;
}

}  // namespace ucjiqp
