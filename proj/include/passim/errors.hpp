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

#include <stdexcept>
#include <string>

namespace passim {

// Raised when an iterative scheme fails to reach its tolerance
// (adaptive quadrature depth exhausted, root bracketing lost, ...).
// Precondition violations use std::domain_error / std::invalid_argument.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace passim
