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

#include "passim/system_model.hpp"

#include <cmath>
#include <stdexcept>

#include "passim/constants.hpp"
#include "passim/units.hpp"

namespace passim {

SystemParams make_params(double carrier_frequency_hz, double bandwidth_hz,
                         double tx_power_dbm, int num_users)
{
    if (!(carrier_frequency_hz > 0.0))
        throw std::domain_error("make_params: carrier frequency must be > 0 Hz");
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("make_params: bandwidth must be > 0 Hz");
    if (num_users < 1)
        throw std::domain_error("make_params: num_users must be >= 1");

    SystemParams p;
    p.carrier_frequency = carrier_frequency_hz;
    p.wavelength = speed_of_light / carrier_frequency_hz;
    p.bandwidth = bandwidth_hz;

    const double noise_dbm = -174.0 + 10.0 * std::log10(bandwidth_hz);
    p.noise_power = dbm_to_watts(noise_dbm);

    const double amp = speed_of_light / (4.0 * pi * carrier_frequency_hz);
    p.gamma = amp * amp / p.noise_power;

    p.num_users = num_users;
    p.tx_power = dbm_to_watts(tx_power_dbm);
    return p;
}

UserPosition sample_user(RandomSource& rng, const RoomGeometry& room)
{
    UserPosition u;
    u.x = rng.uniform(0.0, room.extent);
    u.y = rng.uniform(0.0, room.extent);
    return u;
}

} // namespace passim
