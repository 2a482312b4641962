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
#include <cstdio>
#include <string>
#include <vector>

namespace passim {

/// Fixed 9-significant-digit formatting for every numeric CSV field, so
/// output bytes are stable across runs.
inline std::string format_sig9(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct CsvRow {
    double x = 0.0;
    double value = 0.0;
    std::string method;
    std::string scenario;
    double ci_half_width = 0.0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr const char* csv_header = "x,value,method,scenario,ci_half_width,n_samples,seed";

inline std::string to_csv_line(const CsvRow& r)
{
    std::string line = format_sig9(r.x);
    line += ',';
    line += format_sig9(r.value);
    line += ',';
    line += r.method;
    line += ',';
    line += r.scenario;
    line += ',';
    line += format_sig9(r.ci_half_width);
    line += ',';
    line += std::to_string(r.n_samples);
    line += ',';
    line += std::to_string(r.seed);
    return line;
}

inline std::string to_csv_text(const std::vector<CsvRow>& rows)
{
    std::string text = csv_header;
    text += '\n';
    for (const auto& r : rows) {
        text += to_csv_line(r);
        text += '\n';
    }
    return text;
}

} // namespace passim
