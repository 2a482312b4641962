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

#include "passim/placement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "passim/roots.hpp"

namespace passim {

std::vector<double> lemma1_positions(double d0, const SystemParams& params, int n_half)
{
    if (n_half < 0)
        throw std::domain_error("lemma1_positions: N must be >= 0");
    const double lambda = params.wavelength;
    if (!(d0 > n_half * lambda)) {
        std::ostringstream msg;
        msg << "lemma1_positions: coherent placement requires d0 > N*lambda, got d0 = "
            << d0 << " m, N*lambda = " << n_half * lambda << " m";
        throw std::domain_error(msg.str());
    }

    std::vector<double> offsets;
    offsets.reserve(2 * n_half + 1);
    for (int n = -n_half; n <= n_half; ++n) {
        const double nl = n * lambda;
        offsets.push_back(n == 0 ? 0.0 : nl * (2.0 * d0 + nl) / (2.0 * (d0 + nl)));
    }
    return offsets;
}

std::vector<double> fz_positions(const SystemParams& params, int n_half)
{
    if (n_half < 0)
        throw std::domain_error("fz_positions: N must be >= 0");
    std::vector<double> offsets;
    offsets.reserve(2 * n_half + 1);
    for (int n = -n_half; n <= n_half; ++n)
        offsets.push_back(n * params.wavelength);
    return offsets;
}

SpacingProfile spacing_profile(const std::vector<double>& offsets)
{
    if (offsets.size() < 2)
        throw std::invalid_argument("spacing_profile: need at least two offsets");
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (!(offsets[i] > offsets[i - 1]))
            throw std::invalid_argument("spacing_profile: offsets must be strictly increasing");

    const int n_half = static_cast<int>(offsets.size() / 2);
    SpacingProfile profile;
    profile.reserve(offsets.size() - 1);
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
        profile.push_back({static_cast<int>(i) - n_half, offsets[i + 1] - offsets[i]});
    return profile;
}

double spmu_center_position(const RoomGeometry& room)
{
    return room.extent / 2.0;
}

double optimal_spmu_position(const UserPosition& u1, const UserPosition& u2,
                             const RoomGeometry& room)
{
    UserPosition a = u1;
    UserPosition b = u2;
    if (a.x > b.x)
        std::swap(a, b);
    if (a.x == b.x)
        return a.x;

    const double h2 = room.height * room.height;
    const double q1 = a.y * a.y + h2;
    const double q2 = b.y * b.y + h2;
    const auto stationarity = [&](double x) {
        const double t1 = x - a.x;
        const double t2 = b.x - x;
        return t1 / (t1 * t1 + q1) - t2 / (t2 * t2 + q2);
    };
    // stationarity(a.x) < 0 and stationarity(b.x) > 0, so the bracket holds.
    return bisect(stationarity, a.x, b.x, 1e-12, 200);
}

int count_outside_waveguide(double anchor, const std::vector<double>& offsets,
                            const RoomGeometry& room)
{
    int outside = 0;
    for (double offset : offsets) {
        const double x = anchor + offset;
        if (x < 0.0 || x > room.extent)
            ++outside;
    }
    return outside;
}

PinchingArray make_array(double anchor, std::vector<double> offsets)
{
    PinchingArray array{anchor, std::move(offsets)};
    array.validate();
    return array;
}

} // namespace passim
