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
#include <string>
#include <utility>
#include <vector>

namespace passim::cli {

// Minimal TOML subset used for run configuration files: [section] headers,
// key = value lines, scalar values (integer, float, bool, quoted string)
// and single-line arrays of scalars, plus # comments. Dumping preserves
// insertion order, so dump(parse(dump(x))) is byte-identical.

struct TomlValue {
    enum class Kind { integer, floating, boolean, string, array };

    Kind kind = Kind::integer;
    long long int_v = 0;
    double float_v = 0.0;
    bool bool_v = false;
    std::string string_v;
    std::vector<TomlValue> array_v;

    static TomlValue of(long long v);
    static TomlValue of(double v);
    static TomlValue of(bool v);
    static TomlValue of(std::string v);
    static TomlValue of(std::vector<TomlValue> v);

    // Numeric accessors accept both integer and float tokens; everything
    // else throws std::runtime_error.
    double as_double() const;
    long long as_int() const;
    bool as_bool() const;
    const std::string& as_string() const;
};

class TomlDoc {
public:
    void set(const std::string& section, const std::string& key, TomlValue value);
    const TomlValue* find(const std::string& section, const std::string& key) const;
    bool has(const std::string& section, const std::string& key) const
    {
        return find(section, key) != nullptr;
    }

    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;

    static TomlDoc parse(const std::string& text);
    static TomlDoc parse_file(const std::string& path);
    std::string dump() const;

private:
    using Section = std::vector<std::pair<std::string, TomlValue>>;
    std::vector<std::pair<std::string, Section>> sections_;
};

} // namespace passim::cli
