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

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "passim/csv.hpp"
#include "toml_lite.hpp"

namespace passim::cli {

/// Single-value rate query. Defaults follow the standard evaluation setup
/// (2.4 GHz carrier, 1 MHz bandwidth, two users, 20 m ceiling, 10 m room).
struct RateRequest {
    std::string scenario = "spsu"; // mpsu | spsu | spmu | siso
    std::string method = "theorem"; // theorem | highsnr | maclaurin | quadrature | approx | mc
    double height_m = 20.0;
    double extent_m = 10.0;
    double power_dbm = 30.0;
    int users = 2;
    int n_pas = 10; // N (2N+1 elements), MPSU only
    double fc_hz = 2.4e9;
    double bw_hz = 1e6;
    std::string mpsu_placement = "lemma1"; // lemma1 | fz
    std::string spmu_pa = "center";        // center | optimized
    std::string noise_model = "per-pa";    // per-pa | single
    long long samples = 1000000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

/// Figure reproduction run. `set` holds explicit key=value overrides
/// (keys: h, d, n, users, fc_hz, bw_hz, power_start, power_stop,
/// power_step, d0_nz, d0_fz).
struct FigureRequest {
    std::string name;
    std::uint64_t seed = 1;
    long long samples = 1000000;
    std::string out_dir = ".";
    unsigned threads = 1;
    std::map<std::string, double> set;
};

struct FigureOutput {
    std::string file_name; // e.g. "fig4_theorem_n10.csv"
    std::vector<CsvRow> rows;
};

inline const std::vector<std::string> figure_names = {"fig3", "fig4", "fig5", "fig6",
                                                      "fig7", "fig8", "fig9", "fig10"};

/// Evaluates a rate query; warnings (e.g. approximation used outside its
/// regime) go to `warn`. Throws std::invalid_argument on scenario/method
/// mismatch, std::domain_error on violated preconditions.
double run_rate(const RateRequest& req, std::ostream& warn);

/// Computes every curve of a figure preset. Nothing is written here;
/// callers persist the outputs after all points complete. Curve skips
/// (e.g. Maclaurin without h > D) are logged to `log`.
std::vector<FigureOutput> run_figure(const FigureRequest& req, std::ostream& log);

/// Writes outputs as UTF-8 CSV files under out_dir (created if missing).
void write_figure_outputs(const std::string& out_dir,
                          const std::vector<FigureOutput>& outputs);

// Config round-trip. Dumps resolve to the four-section layout
// [system] [room] [scenario] [sweep]; loads apply file values beneath any
// explicit CLI flags (handled by the caller).
TomlDoc dump_config(const RateRequest& req);
TomlDoc dump_config(const FigureRequest& req);
RateRequest rate_request_from_config(const TomlDoc& doc);
FigureRequest figure_request_from_config(const TomlDoc& doc);

} // namespace passim::cli
