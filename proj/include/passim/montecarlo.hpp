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
#include <vector>

#include "passim/random.hpp"
#include "passim/scenario.hpp"

namespace passim {

struct RateEstimate {
    double mean = 0.0;          // bits/s/Hz
    double ci_half_width = 0.0; // 95% half width, 1.96 sd / sqrt(n)
    long long n_samples = 0;
    std::uint64_t seed = 0;
    // Draws where d0 <= N lambda made the coherent placement infeasible and
    // the far-zone grid was used instead. Counted, never hidden.
    long long nz_fallbacks = 0;
};

/// Samples are generated in fixed blocks of `mc_block_size` draws; block b
/// consumes RandomSource(seed, stream + b). Moments merge in block order,
/// so results are bit-identical for any thread count and reproducible given
/// (config, seed, stream, n). Callers sweeping many points must space
/// stream bases at least ceil(n / mc_block_size) apart.
inline constexpr long long mc_block_size = 16384;

/// Instantaneous SNR of one user drop under the scenario. MPSU places a
/// fresh coherent (or far-zone) array anchored at the user's x; SPMU uses
/// the center PA. Throws std::invalid_argument for SPMU in optimized mode
/// (that placement needs two users; see estimate_rate).
double snr_for_scenario(const ScenarioConfig& cfg, const UserPosition& user);

/// Per-user ergodic rate estimate: mean of (1/I) log2(1 + SNR) over i.i.d.
/// user drops. SPMU in optimized mode draws two users per drop, re-optimizes
/// the PA, and averages both users' rates.
RateEstimate estimate_rate(const ScenarioConfig& cfg, long long n_samples,
                           RandomSource rng, unsigned threads = 1);

/// Ergodic sum rate: I independent users per drop, summed rates. SPMU in
/// optimized mode requires I == 2 and re-optimizes the PA every drop.
RateEstimate estimate_sum_rate(const ScenarioConfig& cfg, long long n_samples,
                               RandomSource rng, unsigned threads = 1);

/// One estimate per entry of the (increasing) sample schedule; row k uses
/// stream base k * 2^20 so rows never share blocks. CI half widths shrink
/// like 1/sqrt(n).
std::vector<RateEstimate> convergence_report(const ScenarioConfig& cfg,
                                             const std::vector<long long>& schedule,
                                             std::uint64_t seed);

} // namespace passim
