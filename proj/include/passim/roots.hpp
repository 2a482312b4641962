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

#include "passim/errors.hpp"

namespace passim {

/// Bisection on [lo, hi]. Requires f(lo) and f(hi) of opposite sign (or
/// zero at an endpoint). Unconditionally convergent; stops when the bracket
/// shrinks below xtol or f hits exactly zero.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 1e-12, int max_iter = 200)
{
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect: no sign change over the bracket");

    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0 || (hi - lo) < xtol)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace passim
