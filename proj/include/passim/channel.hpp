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

#include <cmath>
#include <vector>

#include "passim/system_model.hpp"

namespace passim {

/// Complex channel amplitude. The magnitude carries the 1/m scaling of the
/// free-space factor; the composite gamma factor is applied once at SNR
/// level, never here.
struct ComplexGain {
    double re = 0.0;
    double im = 0.0;

    double magnitude() const { return std::hypot(re, im); }
    double phase() const { return std::atan2(im, re); }
};

/// 2N+1 pinching antennas on the waveguide: element n sits at waveguide
/// coordinate anchor + offsets[n + N]. Offsets are strictly increasing,
/// the count is odd and the middle offset is exactly zero.
struct PinchingArray {
    double anchor = 0.0;          // m, coordinate of the n = 0 element
    std::vector<double> offsets;  // m, ordered n = -N..N

    int half_count() const { return static_cast<int>(offsets.size() / 2); }

    /// Throws std::invalid_argument if the layout contract is violated.
    void validate() const;
};

/// How the noise floor scales for the coherently combined MPSU array.
/// `per_pa` follows the combining model with one noise term per element
/// (denominator (2N+1) sigma^2); `single` uses one sigma^2 for the shared
/// waveguide feed.
enum class NoiseModel { per_pa, single };

/// Free-space LoS amplitude lambda / (4 pi d). Throws std::domain_error for
/// d <= 0.
double los_amplitude(double distance, const SystemParams& params);

/// Distance from a floor user to a PA at waveguide coordinate
/// `pa_waveguide_x`: sqrt((x_pa - x_u)^2 + y_u^2 + h^2).
double pa_user_distance(const UserPosition& user, double pa_waveguide_x,
                        const RoomGeometry& room);

/// Exact phase-coherent channel sum over the array:
///   sum_n (1/d_n) exp(-j 2 pi (d_n + anchor + offset_n) / lambda),
/// i.e. free-space phase plus waveguide propagation phase per element.
/// Phases are reduced mod one cycle before evaluation. Gamma is excluded.
ComplexGain effective_gain_exact(const PinchingArray& array, const UserPosition& user,
                                 const RoomGeometry& room, const SystemParams& params);

/// MPSU instantaneous SNR: gamma P |sum|^2 / (2N+1) under NoiseModel::per_pa,
/// gamma P |sum|^2 under NoiseModel::single. Validates the array layout.
double snr_mpsu_exact(const PinchingArray& array, const UserPosition& user,
                      const RoomGeometry& room, const SystemParams& params,
                      NoiseModel noise = NoiseModel::per_pa);

/// SPSU: dedicated PA directly above the user's x, so the horizontal
/// offset vanishes and SNR = gamma P / (y^2 + h^2).
double snr_spsu(const UserPosition& user, const RoomGeometry& room,
                const SystemParams& params);

/// SPMU: shared PA at waveguide coordinate pa_x.
double snr_spmu(double pa_x, const UserPosition& user, const RoomGeometry& room,
                const SystemParams& params);

/// Conventional baseline: single fixed antenna at the AP corner (0, 0, h).
double snr_siso(const UserPosition& user, const RoomGeometry& room,
                const SystemParams& params);

} // namespace passim
