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

#include "passim/analytic_rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "passim/quadrature.hpp"

namespace passim {

namespace {
constexpr double ln2 = 0.693147180559945309417232121458176568;
}

double lemma2_amplitude(double d0, const SystemParams& params, int n_half)
{
    if (!(d0 > 0.0))
        throw std::domain_error("lemma2_amplitude: d0 must be > 0 m");
    if (n_half < 0)
        throw std::domain_error("lemma2_amplitude: N must be >= 0");
    return 2.0 / params.wavelength * std::asinh(n_half * params.wavelength / d0);
}

double ergodic_rate_closed_form(const SystemParams& params, const RoomGeometry& room,
                                double antenna_gain)
{
    const double D = room.extent;
    const double h = room.height;
    if (!(D > 0.0) || !(h > 0.0))
        throw std::domain_error("ergodic_rate_closed_form: room dimensions must be > 0");
    if (antenna_gain < 0.0)
        throw std::domain_error("ergodic_rate_closed_form: antenna gain must be >= 0");

    const double gp = antenna_gain * params.gamma * params.tx_power;
    if (gp == 0.0)
        return 0.0;

    const double inv_users = 1.0 / params.num_users;
    const double s = std::sqrt(h * h + gp);
    const double log_term = inv_users * std::log2(1.0 + gp / (D * D + h * h));
    const double tail = 2.0 * inv_users / (D * ln2) *
                        (s * std::atan(D / s) - h * std::atan(D / h));
    return log_term + tail;
}

double rate_mpsu(const SystemParams& params, const RoomGeometry& room, int n_half)
{
    if (n_half < 0)
        throw std::domain_error("rate_mpsu: N must be >= 0");
    const double gain = n_half == 0 ? 1.0 : 2.0 * n_half;
    return ergodic_rate_closed_form(params, room, gain);
}

double rate_spsu(const SystemParams& params, const RoomGeometry& room)
{
    return ergodic_rate_closed_form(params, room, 1.0);
}

double rate_highsnr(const SystemParams& params, const RoomGeometry& room,
                    double antenna_gain)
{
    const double D = room.extent;
    const double h = room.height;
    if (!(D > 0.0) || !(h > 0.0))
        throw std::domain_error("rate_highsnr: room dimensions must be > 0");

    const double gp = antenna_gain * params.gamma * params.tx_power;
    const double inv_users = 1.0 / params.num_users;
    return inv_users * std::log2(1.0 + gp / (D * D + h * h)) + 2.0 * inv_users / ln2 -
           2.0 * h * inv_users / (D * ln2) * std::atan(D / h);
}

double rate_spsu_maclaurin(const SystemParams& params, const RoomGeometry& room,
                           double tol, int max_terms)
{
    const double D = room.extent;
    const double h = room.height;
    if (!(D > 0.0) || !(h > 0.0))
        throw std::domain_error("rate_spsu_maclaurin: room dimensions must be > 0");
    if (!(h > D))
        throw std::domain_error(
            "rate_spsu_maclaurin: series diverges unless h > D (strict)");

    const double gp = params.gamma * params.tx_power;
    if (gp == 0.0)
        return 0.0;

    const double a = h * h + gp;
    const double r1 = D * D / a;      // < 1 since a > h^2 > D^2
    const double r2 = D * D / (h * h); // < 1 since h > D
    double p1 = 1.0;
    double p2 = 1.0;
    double sum = 0.0; // k = 0 bracket is identically zero
    double sign = 1.0;
    for (int k = 1; k < max_terms; ++k) {
        p1 *= r1;
        p2 *= r2;
        sign = -sign;
        const double term = sign * (p1 - p2) / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) < tol)
            break;
    }

    const double inv_users = 1.0 / params.num_users;
    return inv_users * std::log2(1.0 + gp / (D * D + h * h)) +
           2.0 * inv_users / ln2 * sum;
}

double rate_spmu_quadrature(const SystemParams& params, const RoomGeometry& room)
{
    const double D = room.extent;
    const double h = room.height;
    if (!(D > 0.0) || !(h > 0.0))
        throw std::domain_error("rate_spmu_quadrature: room dimensions must be > 0");

    const double gp = params.gamma * params.tx_power;
    if (gp == 0.0)
        return 0.0;

    const double h2 = h * h;
    const double integral = integrate_adaptive_2d(
        [&](double x, double y) {
            const double dx = D / 2.0 - x;
            const double d2 = dx * dx + y * y + h2;
            return std::log2(1.0 + gp / d2);
        },
        0.0, D, 0.0, D);
    return integral / (params.num_users * D * D);
}

double rate_spmu_approx(const SystemParams& params, const RoomGeometry& room)
{
    const double D = room.extent;
    const double h = room.height;
    if (!(D > 0.0) || !(h > 0.0))
        throw std::domain_error("rate_spmu_approx: room dimensions must be > 0");

    const double gp = params.gamma * params.tx_power;
    const double base = 2.0 * D * D + h * h;
    const double s = std::sqrt(D * D + h * h);
    const double expr = (std::log2((base + gp) / base) + 2.0 / ln2 -
                         2.0 * s / (D * ln2) * std::atan(D / s)) /
                        params.num_users;
    return std::max(expr, 0.0);
}

double highsnr_slope(ScenarioKind /*kind*/, const SystemParams& params)
{
    if (params.num_users < 1)
        throw std::domain_error("highsnr_slope: num_users must be >= 1");
    return 1.0 / params.num_users;
}

double scenario_gap_mpsu_spsu(const SystemParams& params, const RoomGeometry& room,
                              int n_half)
{
    if (n_half < 1)
        throw std::domain_error("scenario_gap_mpsu_spsu: N must be >= 1");
    const double D = room.extent;
    const double h = room.height;
    const double gp = params.gamma * params.tx_power;
    const double denom = D * D + h * h;
    return std::log2(1.0 + 2.0 * n_half * gp / denom) - std::log2(1.0 + gp / denom);
}

std::string to_string(ScenarioKind kind)
{
    switch (kind) {
    case ScenarioKind::mpsu: return "mpsu";
    case ScenarioKind::spsu: return "spsu";
    case ScenarioKind::spmu: return "spmu";
    case ScenarioKind::siso: return "siso";
    }
    return "unknown";
}

} // namespace passim
