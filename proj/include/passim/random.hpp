// SPDX-License-Identifier: Apache-2.0
//
// pass-sim: performance models and simulation for uplink pinching-antenna
// systems (PASS)
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace passim {

/// Deterministic random source: PCG32 (permuted congruential generator,
/// XSH-RR output function). Identical (seed, stream) yields an identical
/// value sequence on every platform; all operations are integer-only.
/// A RandomSource is a value: split per work unit, never shared mutably.
class RandomSource {
public:
    RandomSource(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), state_(0), inc_((stream << 1u) | 1u)
    {
        next_u32();
        state_ += seed;
        next_u32();
    }

    std::uint32_t next_u32()
    {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t hi = next_u32();
        return (hi << 32u) | next_u32();
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01()
    {
        return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_;
    std::uint64_t inc_;
};

} // namespace passim
