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

#ifndef UCJIQP_DISTRIBUTION_H
#define UCJIQP_DISTRIBUTION_H

#include <map>
#include <string>

#include "ucjiqp/state_vector.h"

namespace ucjiqp {

/// Probabilities at or below this are dropped when building a distribution
/// from a statevector. Amplitude round-off lands around 1e-16, i.e. 1e-32 in
/// probability, well under the floor.
inline constexpr double kProbabilityFloor = 1e-20;

/// Sparse probability map over fixed-width bit strings (bit 0 printed first).
/// Keys iterate in lexicographic order.
class Distribution {
   public:
    explicit Distribution(int width) : width_(width) {
    }

    int width() const {
        return width_;
    }
    const std::map<std::string, double> &entries() const {
        return probs_;
    }

    /// Probability of `bits`, zero when absent.
    double at(const std::string &bits) const;

    /// Adds `p` to the entry for `bits`. Throws InputError on width mismatch.
    void add(const std::string &bits, double p);

    double total() const;
    void normalize();

   private:
    int width_;
    std::map<std::string, double> probs_;
};

/// |amplitude|^2 for every basis state above kProbabilityFloor.
Distribution distribution_of(const StateVector &state);

}  // namespace ucjiqp

#endif
