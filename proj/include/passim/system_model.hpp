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

#include "passim/random.hpp"

namespace passim {

/// Physical-layer constants of one uplink deployment. Immutable value type.
struct SystemParams {
    double carrier_frequency = 0.0; // Hz
    double wavelength = 0.0;        // m, = c / carrier_frequency
    double bandwidth = 0.0;         // Hz
    double noise_power = 0.0;       // W, sigma^2 = -174 dBm/Hz + 10 log10(BW)
    double gamma = 0.0;             // m^2/W, (c / (4 pi f_c))^2 / sigma^2
    int num_users = 1;              // I, TDMA slots
    double tx_power = 0.0;          // W per user
};

/// Square room of side `extent` with the waveguide along one ceiling edge
/// at height `height`. Users live on the floor (z = 0).
struct RoomGeometry {
    double extent = 0.0; // m (D)
    double height = 0.0; // m (h)
};

struct UserPosition {
    double x = 0.0; // m, along the waveguide axis
    double y = 0.0; // m, across the room
};

/// Builds SystemParams from CLI-level units. Noise power follows the thermal
/// model sigma^2 = -174 + 10 log10(BW) dBm. Throws std::domain_error on
/// non-positive frequency/bandwidth or num_users < 1.
SystemParams make_params(double carrier_frequency_hz, double bandwidth_hz,
                         double tx_power_dbm, int num_users);

/// Draws a user position with x and y independent uniform on [0, D].
/// x is drawn first, then y.
UserPosition sample_user(RandomSource& rng, const RoomGeometry& room);

} // namespace passim
