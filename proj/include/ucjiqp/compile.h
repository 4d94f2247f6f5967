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

#ifndef UCJIQP_COMPILE_H
#define UCJIQP_COMPILE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ucjiqp/distribution.h"
#include "ucjiqp/iqp.h"
#include "ucjiqp/state_vector.h"
#include "ucjiqp/ucj.h"

namespace ucjiqp {

/// Leakage at or above this makes decode_distribution fail.
inline constexpr double kLeakageThreshold = 1e-9;

/// IQP qubit a lives on the mirror pair (n-a-1, n+a) of a 2n-mode register:
/// |0bar>_a = |0>_{n-a-1} |1>_{n+a} and |1bar>_a = |1>_{n-a-1} |0>_{n+a}.
class PairEncoding {
   public:
    explicit PairEncoding(int n);

    int n() const {
        return n_;
    }
    int modes() const {
        return 2 * n_;
    }
    int upper(int a) const {
        return n_ - a - 1;
    }
    int lower(int a) const {
        return n_ + a;
    }

    /// n-qubit index for a 2n-mode index, or nullopt when some pair holds
    /// zero or two particles.
    std::optional<uint64_t> decode_index(uint64_t modes_index) const;
    uint64_t encode_index(uint64_t qubit_index) const;

   private:
    int n_;
};

Ucj1Compiled compile_iqp(const IqpCircuit &c);

/// Decodes a 2n-character outcome. nullopt signals a coded-subspace
/// violation; InputError if the length is not 2n.
std::optional<std::string> decode_outcome(std::string_view bits, const PairEncoding &enc);

struct DecodedDistribution {
    Distribution distribution;
    double leakage;
};

/// Maps a 2n-bit distribution onto n-bit outcomes. Throws LeakageError when
/// the mass on violating strings reaches kLeakageThreshold; below it the
/// decoded distribution is renormalized.
DecodedDistribution decode_distribution(const Distribution &d);

/// Amplitudes of the coded basis states, as an n-qubit state. Not renormalized.
StateVector decode_state(const StateVector &s, const PairEncoding &enc);

}  // namespace ucjiqp

#endif
