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

#include <string>

#include "passim/channel.hpp"
#include "passim/system_model.hpp"

namespace passim {

enum class ScenarioKind {
    mpsu, // 2N+1 dedicated PAs per user, coherent combining
    spsu, // one dedicated PA per user
    spmu, // one shared PA for all users
    siso  // fixed antenna at the AP corner (baseline)
};

enum class MpsuPlacement { lemma1, fz };
enum class SpmuPaMode { center, optimized };

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::spsu;
    int n_half = 0;                                   // N for MPSU (2N+1 elements)
    MpsuPlacement placement = MpsuPlacement::lemma1;  // MPSU only
    SpmuPaMode spmu_pa = SpmuPaMode::center;          // SPMU only
    NoiseModel noise_model = NoiseModel::per_pa;      // MPSU only
    RoomGeometry room;
    SystemParams params;
};

std::string to_string(ScenarioKind kind);

} // namespace passim
