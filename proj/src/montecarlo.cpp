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

#include "passim/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

#include "passim/placement.hpp"

namespace passim {

namespace {

// Welford/Chan running moments; merge order is fixed by the caller.
struct Moments {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++n;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o)
    {
        if (o.n == 0)
            return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double d = o.mean - mean;
        const long long t = n + o.n;
        m2 += o.m2 + d * d * (static_cast<double>(n) * o.n / t);
        mean += d * static_cast<double>(o.n) / t;
        n = t;
    }
};

struct BlockResult {
    Moments moments;
    long long nz_fallbacks = 0;
};

double rate_from_snr(double snr, int num_users)
{
    return std::log2(1.0 + snr) / num_users;
}

// One user's rate in the MPSU scenario: a fresh array is placed at the
// drawn position. When d0 <= N lambda the coherent offsets do not exist;
// the draw is kept (preserving the user distribution), evaluated on the
// far-zone grid and tallied.
double mpsu_drop_rate(const ScenarioConfig& cfg, const UserPosition& user,
                      long long& nz_fallbacks)
{
    const double h = cfg.room.height;
    const double d0 = std::sqrt(user.y * user.y + h * h);
    std::vector<double> offsets;
    if (cfg.placement == MpsuPlacement::lemma1 &&
        d0 > cfg.n_half * cfg.params.wavelength) {
        offsets = lemma1_positions(d0, cfg.params, cfg.n_half);
    } else {
        if (cfg.placement == MpsuPlacement::lemma1)
            ++nz_fallbacks;
        offsets = fz_positions(cfg.params, cfg.n_half);
    }
    const PinchingArray array{user.x, std::move(offsets)};
    const double snr = snr_mpsu_exact(array, user, cfg.room, cfg.params, cfg.noise_model);
    return rate_from_snr(snr, cfg.params.num_users);
}

double single_user_drop_rate(const ScenarioConfig& cfg, const UserPosition& user,
                             long long& nz_fallbacks)
{
    switch (cfg.kind) {
    case ScenarioKind::mpsu:
        return mpsu_drop_rate(cfg, user, nz_fallbacks);
    case ScenarioKind::spsu:
        return rate_from_snr(snr_spsu(user, cfg.room, cfg.params), cfg.params.num_users);
    case ScenarioKind::spmu:
        return rate_from_snr(
            snr_spmu(spmu_center_position(cfg.room), user, cfg.room, cfg.params),
            cfg.params.num_users);
    case ScenarioKind::siso:
        return rate_from_snr(snr_siso(user, cfg.room, cfg.params), cfg.params.num_users);
    }
    throw std::logic_error("unreachable scenario kind");
}

bool needs_two_user_drop(const ScenarioConfig& cfg)
{
    return cfg.kind == ScenarioKind::spmu && cfg.spmu_pa == SpmuPaMode::optimized;
}

// Drop value for estimate_rate: per-user rate.
double rate_drop(const ScenarioConfig& cfg, RandomSource& rng, long long& nz_fallbacks)
{
    if (needs_two_user_drop(cfg)) {
        if (cfg.params.num_users != 2)
            throw std::invalid_argument(
                "estimate_rate: optimized SPMU placement is defined for two users");
        const UserPosition u1 = sample_user(rng, cfg.room);
        const UserPosition u2 = sample_user(rng, cfg.room);
        const double x = optimal_spmu_position(u1, u2, cfg.room);
        const double r1 =
            rate_from_snr(snr_spmu(x, u1, cfg.room, cfg.params), cfg.params.num_users);
        const double r2 =
            rate_from_snr(snr_spmu(x, u2, cfg.room, cfg.params), cfg.params.num_users);
        return 0.5 * (r1 + r2);
    }
    const UserPosition u = sample_user(rng, cfg.room);
    return single_user_drop_rate(cfg, u, nz_fallbacks);
}

// Drop value for estimate_sum_rate: sum over the I users of one drop.
double sum_rate_drop(const ScenarioConfig& cfg, RandomSource& rng, long long& nz_fallbacks)
{
    if (needs_two_user_drop(cfg)) {
        if (cfg.params.num_users != 2)
            throw std::invalid_argument(
                "estimate_sum_rate: optimized SPMU placement is defined for two users");
        const UserPosition u1 = sample_user(rng, cfg.room);
        const UserPosition u2 = sample_user(rng, cfg.room);
        const double x = optimal_spmu_position(u1, u2, cfg.room);
        return rate_from_snr(snr_spmu(x, u1, cfg.room, cfg.params), 2) +
               rate_from_snr(snr_spmu(x, u2, cfg.room, cfg.params), 2);
    }
    double sum = 0.0;
    for (int i = 0; i < cfg.params.num_users; ++i) {
        const UserPosition u = sample_user(rng, cfg.room);
        sum += single_user_drop_rate(cfg, u, nz_fallbacks);
    }
    return sum;
}

template <class DropFn>
BlockResult run_block(const ScenarioConfig& cfg, std::uint64_t seed, std::uint64_t stream,
                      long long count, DropFn drop)
{
    BlockResult r;
    RandomSource rng(seed, stream);
    for (long long i = 0; i < count; ++i)
        r.moments.add(drop(cfg, rng, r.nz_fallbacks));
    return r;
}

template <class DropFn>
RateEstimate estimate_impl(const ScenarioConfig& cfg, long long n_samples,
                           RandomSource rng, unsigned threads, DropFn drop)
{
    if (n_samples < 1)
        throw std::domain_error("estimate: n_samples must be >= 1");
    if (cfg.kind == ScenarioKind::mpsu && cfg.n_half < 0)
        throw std::domain_error("estimate: MPSU requires N >= 0");

    const std::uint64_t seed = rng.seed();
    const std::uint64_t stream0 = rng.stream();
    const long long n_blocks = (n_samples + mc_block_size - 1) / mc_block_size;

    std::vector<BlockResult> results(static_cast<std::size_t>(n_blocks));
    auto block_count = [&](long long b) {
        return b + 1 < n_blocks ? mc_block_size : n_samples - b * mc_block_size;
    };

    if (threads <= 1) {
        for (long long b = 0; b < n_blocks; ++b)
            results[static_cast<std::size_t>(b)] =
                run_block(cfg, seed, stream0 + static_cast<std::uint64_t>(b),
                          block_count(b), drop);
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<long long> next{0};
        for (unsigned t = 0; t < threads; ++t) {
            workers.push_back(std::async(std::launch::async, [&]() {
                for (long long b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
                    results[static_cast<std::size_t>(b)] =
                        run_block(cfg, seed, stream0 + static_cast<std::uint64_t>(b),
                                  block_count(b), drop);
            }));
        }
        for (auto& w : workers)
            w.get();
    }

    // Serial merge in block order: identical result for any thread count.
    BlockResult total;
    for (const auto& r : results) {
        total.moments.merge(r.moments);
        total.nz_fallbacks += r.nz_fallbacks;
    }

    RateEstimate est;
    est.mean = total.moments.mean;
    est.n_samples = n_samples;
    est.seed = seed;
    est.nz_fallbacks = total.nz_fallbacks;
    if (n_samples > 1) {
        const double var = total.moments.m2 / (n_samples - 1);
        est.ci_half_width = 1.96 * std::sqrt(var / n_samples);
    }
    return est;
}

} // namespace

double snr_for_scenario(const ScenarioConfig& cfg, const UserPosition& user)
{
    switch (cfg.kind) {
    case ScenarioKind::mpsu: {
        const double d0 = std::sqrt(user.y * user.y + cfg.room.height * cfg.room.height);
        std::vector<double> offsets =
            cfg.placement == MpsuPlacement::lemma1 ? lemma1_positions(d0, cfg.params, cfg.n_half)
                                                   : fz_positions(cfg.params, cfg.n_half);
        const PinchingArray array{user.x, std::move(offsets)};
        return snr_mpsu_exact(array, user, cfg.room, cfg.params, cfg.noise_model);
    }
    case ScenarioKind::spsu:
        return snr_spsu(user, cfg.room, cfg.params);
    case ScenarioKind::spmu:
        if (cfg.spmu_pa == SpmuPaMode::optimized)
            throw std::invalid_argument(
                "snr_for_scenario: optimized SPMU placement needs two users");
        return snr_spmu(spmu_center_position(cfg.room), user, cfg.room, cfg.params);
    case ScenarioKind::siso:
        return snr_siso(user, cfg.room, cfg.params);
    }
    throw std::logic_error("unreachable scenario kind");
}

RateEstimate estimate_rate(const ScenarioConfig& cfg, long long n_samples,
                           RandomSource rng, unsigned threads)
{
    return estimate_impl(cfg, n_samples, rng, threads,
                         [](const ScenarioConfig& c, RandomSource& r, long long& t) {
                             return rate_drop(c, r, t);
                         });
}

RateEstimate estimate_sum_rate(const ScenarioConfig& cfg, long long n_samples,
                               RandomSource rng, unsigned threads)
{
    return estimate_impl(cfg, n_samples, rng, threads,
                         [](const ScenarioConfig& c, RandomSource& r, long long& t) {
                             return sum_rate_drop(c, r, t);
                         });
}

std::vector<RateEstimate> convergence_report(const ScenarioConfig& cfg,
                                             const std::vector<long long>& schedule,
                                             std::uint64_t seed)
{
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("convergence_report: schedule must be increasing");

    std::vector<RateEstimate> rows;
    rows.reserve(schedule.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const std::uint64_t stream = static_cast<std::uint64_t>(i) << 20u;
        rows.push_back(estimate_rate(cfg, schedule[i], RandomSource(seed, stream)));
    }
    return rows;
}

} // namespace passim
