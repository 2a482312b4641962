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
#include <stdexcept>

namespace passim {

// All internal power math is in watts; dBm appears only at the CLI boundary.

inline double dbm_to_watts(double p_dbm)
{
    if (!std::isfinite(p_dbm))
        throw std::domain_error("dbm_to_watts: input must be finite");
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double p_watts)
{
    if (!std::isfinite(p_watts) || p_watts <= 0.0)
        throw std::domain_error("watts_to_dbm: power must be finite and > 0 W");
    return 10.0 * std::log10(p_watts) + 30.0;
}

} // namespace passim
