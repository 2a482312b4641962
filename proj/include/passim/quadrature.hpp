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
#include <limits>

#include "passim/errors.hpp"

namespace passim {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_depth = 40;
};

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth, const QuadratureOptions& opt)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    // Refining below the floating-point noise of the partial sums cannot
    // improve the estimate, so the noise floor also counts as converged.
    const double noise = 32.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(left) + std::abs(right));
    if (std::abs(err) <= 15.0 * std::max(tol, noise))
        return left + right + err / 15.0;
    if (depth >= opt.max_depth)
        throw numerical_error("adaptive Simpson: max depth reached before tolerance");
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, opt) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, opt);
}

} // namespace detail

/// Deterministic adaptive Simpson quadrature of f over [a, b].
template <class F>
double integrate_adaptive(F&& f, double a, double b, QuadratureOptions opt = {})
{
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(whole));
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, 0, opt);
}

/// Nested 1-D adaptive Simpson over [ax, bx] x [ay, by]. The inner integral
/// runs three orders tighter than the outer one: the outer pass sees the
/// inner error as integrand noise and must stay above it.
template <class F2>
double integrate_adaptive_2d(F2&& f, double ax, double bx, double ay, double by,
                             QuadratureOptions opt = {})
{
    QuadratureOptions inner = opt;
    inner.rel_tol = 1e-3 * opt.rel_tol;
    inner.abs_tol = std::max(1e-3 * opt.abs_tol, 1e-15);
    auto outer = [&](double x) {
        return integrate_adaptive([&](double y) { return f(x, y); }, ay, by, inner);
    };
    return integrate_adaptive(outer, ax, bx, opt);
}

} // namespace passim
