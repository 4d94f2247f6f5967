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

#include "ucjiqp/rng.h"

#include <set>

#include <gtest/gtest.h>

namespace ucjiqp {
namespace {

// Known-answer vectors for Philox4x32-10 from the Random123 distribution.
TEST(Philox, KnownAnswerZero) {
    const auto out = Philox4x32::block({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(out, (Philox4x32::Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
    const auto out = Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
    EXPECT_EQ(out, (Philox4x32::Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
    const auto out =
        Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
    EXPECT_EQ(out, (Philox4x32::Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, UniformIsInUnitIntervalAndIndexAddressable) {
    CounterStream stream(42, 7);
    std::set<double> seen;
    for (uint64_t i = 0; i < 1000; ++i) {
        const double u = stream.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        EXPECT_EQ(u, Philox4x32::uniform(42, 7, i));
        seen.insert(u);
    }
    EXPECT_EQ(seen.size(), 1000u);
}

TEST(Philox, LeftOpenIntervalAndBoundedIntegers) {
    CounterStream stream(3, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = stream.uniform_left_open(-1.0, 1.0);
        EXPECT_GT(x, -1.0);
        EXPECT_LE(x, 1.0);
        EXPECT_LT(stream.below(5), 5u);
    }
}

TEST(Philox, SeedsAndStreamsDiffer) {
    EXPECT_NE(Philox4x32::uniform(1, 0, 0), Philox4x32::uniform(2, 0, 0));
    EXPECT_NE(Philox4x32::uniform(1, 0, 0), Philox4x32::uniform(1, 1, 0));
}

}  // namespace
}  // namespace ucjiqp
