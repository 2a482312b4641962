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

#include "passim/scenario.hpp"
#include "passim/system_model.hpp"

namespace passim {

/// Far-zone closed form of the coherent channel magnitude for 2N+1
/// elements at minimum distance d0: (2 / lambda) asinh(N lambda / d0).
/// Compared with the exact sum it drops roughly one center term, so it
/// sits about 2N/(2N+1) below the direct summation.
double lemma2_amplitude(double d0, const SystemParams& params, int n_half);

/// Shared ergodic-rate kernel over the uniform y distribution:
///   (1/I) log2(1 + g gamma P / (D^2 + h^2))
///   + 2/(I D ln 2) (sqrt(h^2 + g gamma P) atan(D / sqrt(h^2 + g gamma P))
///                   - h atan(D / h))
/// with antenna gain factor g. Exact integral of (1/I) log2(1 + g gamma P
/// / (y^2 + h^2)); returns exactly 0 when g gamma P == 0.
double ergodic_rate_closed_form(const SystemParams& params, const RoomGeometry& room,
                                double antenna_gain);

/// MPSU closed form: gain factor 2N. N = 0 means a single element, which
/// is the SPSU case (gain 1).
double rate_mpsu(const SystemParams& params, const RoomGeometry& room, int n_half);

/// SPSU closed form: the kernel with gain 1.
double rate_spsu(const SystemParams& params, const RoomGeometry& room);

/// High-SNR limit of the kernel: the arctan term collapses to a constant.
/// |rate_highsnr - closed form| <= 2 D^2 / (3 I ln2 (h^2 + g gamma P)).
double rate_highsnr(const SystemParams& params, const RoomGeometry& room,
                    double antenna_gain);

/// Maclaurin-series form of the SPSU rate. Converges only for h > D
/// (throws std::domain_error otherwise). Truncates when the current term
/// drops below tol; the term ratio (D/h)^2 < 1 guarantees geometric decay.
double rate_spsu_maclaurin(const SystemParams& params, const RoomGeometry& room,
                           double tol = 1e-12, int max_terms = 500);

/// SPMU rate with the shared PA fixed at the waveguide center: the exact
/// double integral of (1/I) log2(1 + gamma P / ((D/2 - x)^2 + y^2 + h^2))
/// over the room [0, D]^2, by adaptive Simpson (rel 1e-8 / abs 1e-12).
double rate_spmu_quadrature(const SystemParams& params, const RoomGeometry& room);

/// Closed-form approximation of the center-PA SPMU rate (valid regime
/// h > D, high SNR):
///   (1/I) [ log2((2D^2 + h^2 + gamma P) / (2D^2 + h^2)) + 2/ln2
///           - (2 sqrt(D^2 + h^2) / (D ln2)) atan(D / sqrt(D^2 + h^2)) ].
/// Clamped at 0; the expression is meaningless for gamma P -> 0.
double rate_spmu_approx(const SystemParams& params, const RoomGeometry& room);

/// High-SNR slope: 1/I for every scenario, independent of N.
double highsnr_slope(ScenarioKind kind, const SystemParams& params);

/// Ergodic sum-rate gap between MPSU and SPSU:
///   log2(1 + 2N gamma P / (D^2 + h^2)) - log2(1 + gamma P / (D^2 + h^2)),
/// strictly positive for P > 0, tending to log2(2N) at high SNR. Equals
/// I (rate_highsnr(2N) - rate_highsnr(1)) since the constant tails cancel.
double scenario_gap_mpsu_spsu(const SystemParams& params, const RoomGeometry& room,
                              int n_half);

} // namespace passim
