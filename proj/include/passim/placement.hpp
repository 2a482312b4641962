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

#include <vector>

#include "passim/channel.hpp"
#include "passim/system_model.hpp"

namespace passim {

struct SpacingEntry {
    int index;      // n: spacing between elements n and n+1
    double spacing; // m
};
using SpacingProfile = std::vector<SpacingEntry>;

/// Phase-coherent element offsets for 2N+1 PAs around the anchor:
///   x_n = n lambda (2 d0 + n lambda) / (2 (d0 + n lambda)), n = -N..N,
/// which satisfies sqrt(x_n^2 + d0^2) + x_n = d0 + n lambda exactly for
/// every n. Requires d0 > N lambda (strict); throws std::domain_error
/// otherwise. d0 is the minimum PA-user distance sqrt(y^2 + h^2).
std::vector<double> lemma1_positions(double d0, const SystemParams& params, int n_half);

/// Far-zone approximation of the coherent offsets: x_n = n lambda.
std::vector<double> fz_positions(const SystemParams& params, int n_half);

/// Consecutive spacings of a strictly increasing offset list (2N entries
/// for 2N+1 offsets). Throws std::invalid_argument on unsorted input.
SpacingProfile spacing_profile(const std::vector<double>& offsets);

/// Fixed single-PA rule for the shared-PA scenario: the waveguide center.
double spmu_center_position(const RoomGeometry& room);

/// Optimal shared-PA coordinate for two users: the stationary point of the
/// high-SNR sum rate in [x_u1, x_u2], i.e. the root of
///   (x - x_u1)/((x - x_u1)^2 + y_u1^2 + h^2)
///     = (x_u2 - x)/((x - x_u2)^2 + y_u2^2 + h^2).
/// Bisection (the endpoints bracket a sign change); user order is
/// normalized internally; equal x coordinates return that coordinate.
double optimal_spmu_position(const UserPosition& u1, const UserPosition& u2,
                             const RoomGeometry& room);

/// Elements whose absolute coordinate anchor + offset falls outside the
/// waveguide span [0, D]. Offsets are reported, never clamped: clamping
/// would break phase coherence.
int count_outside_waveguide(double anchor, const std::vector<double>& offsets,
                            const RoomGeometry& room);

/// Bundles offsets with an anchor and validates the layout contract.
PinchingArray make_array(double anchor, std::vector<double> offsets);

} // namespace passim
