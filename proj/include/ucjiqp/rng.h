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

#ifndef UCJIQP_RNG_H
#define UCJIQP_RNG_H

#include <array>
#include <cstdint>

namespace ucjiqp {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Every output block is a pure function of (key, counter), so any draw can
/// be reproduced without replaying the draws before it.
class Philox4x32 {
   public:
    using Counter = std::array<uint32_t, 4>;
    using Key = std::array<uint32_t, 2>;

    static Counter block(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const uint64_t p0 = static_cast<uint64_t>(kMul0) * ctr[0];
            const uint64_t p1 = static_cast<uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<uint32_t>(p1),
                   static_cast<uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<uint32_t>(p0)};
        }
        return ctr;
    }

    /// Uniform double in [0, 1) with 53 random bits, keyed by (seed, stream, index).
    static double uniform(uint64_t seed, uint64_t stream, uint64_t index) {
        const Counter out = block(
            {static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32), static_cast<uint32_t>(stream),
             static_cast<uint32_t>(stream >> 32)},
            {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
        const uint64_t bits = (static_cast<uint64_t>(out[0]) << 32) | out[1];
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

   private:
    static constexpr uint32_t kMul0 = 0xD2511F53;
    static constexpr uint32_t kMul1 = 0xCD9E8D57;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr uint32_t kWeyl1 = 0xBB67AE85;
};

/// Sequential view over a Philox stream. Draw i of stream s under seed k is
/// Philox4x32::uniform(k, s, i), independent of how many draws were taken before.
class CounterStream {
   public:
    CounterStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
    }

    double uniform() {
        return Philox4x32::uniform(seed_, stream_, next_++);
    }

    /// Uniform on the half-open interval (lo, hi].
    double uniform_left_open(double lo, double hi) {
        return hi - (hi - lo) * uniform();
    }

    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>(uniform() * static_cast<double>(bound)) % bound;
    }

   private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t next_ = 0;
};

}  // namespace ucjiqp

#endif
