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

#include "toml_lite.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace passim::cli {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what)
{
    throw std::runtime_error("toml: line " + std::to_string(line_no) + ": " + what);
}

bool is_integer_token(const std::string& t)
{
    if (t.empty())
        return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size())
        return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            return false;
    return true;
}

TomlValue parse_scalar(const std::string& token, std::size_t line_no)
{
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
        std::string out;
        for (std::size_t i = 1; i + 1 < token.size(); ++i) {
            if (token[i] == '\\' && i + 2 < token.size()) {
                ++i;
                switch (token[i]) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: fail(line_no, "unsupported escape in string");
                }
            } else {
                out += token[i];
            }
        }
        return TomlValue::of(std::move(out));
    }
    if (token == "true")
        return TomlValue::of(true);
    if (token == "false")
        return TomlValue::of(false);
    if (is_integer_token(token))
        return TomlValue::of(static_cast<long long>(std::strtoll(token.c_str(), nullptr, 10)));

    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0' || token.empty())
        fail(line_no, "cannot parse value '" + token + "'");
    return TomlValue::of(v);
}

// Splits a single-line array body on commas outside quotes.
std::vector<std::string> split_array_items(const std::string& body, std::size_t line_no)
{
    std::vector<std::string> items;
    std::string cur;
    bool in_string = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == '"' && (i == 0 || body[i - 1] != '\\'))
            in_string = !in_string;
        if (c == ',' && !in_string) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (in_string)
        fail(line_no, "unterminated string in array");
    const std::string last = trim(cur);
    if (!last.empty())
        items.push_back(last);
    return items;
}

std::string strip_comment(const std::string& line)
{
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\'))
            in_string = !in_string;
        if (c == '#' && !in_string)
            return line.substr(0, i);
    }
    return line;
}

void dump_value(std::string& out, const TomlValue& v)
{
    char buf[40];
    switch (v.kind) {
    case TomlValue::Kind::integer:
        out += std::to_string(v.int_v);
        break;
    case TomlValue::Kind::floating:
        std::snprintf(buf, sizeof(buf), "%.17g", v.float_v);
        out += buf;
        break;
    case TomlValue::Kind::boolean:
        out += v.bool_v ? "true" : "false";
        break;
    case TomlValue::Kind::string:
        out += '"';
        for (char c : v.string_v) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        out += '"';
        break;
    case TomlValue::Kind::array:
        out += '[';
        for (std::size_t i = 0; i < v.array_v.size(); ++i) {
            if (i)
                out += ", ";
            dump_value(out, v.array_v[i]);
        }
        out += ']';
        break;
    }
}

} // namespace

TomlValue TomlValue::of(long long v)
{
    TomlValue t;
    t.kind = Kind::integer;
    t.int_v = v;
    return t;
}

TomlValue TomlValue::of(double v)
{
    TomlValue t;
    t.kind = Kind::floating;
    t.float_v = v;
    return t;
}

TomlValue TomlValue::of(bool v)
{
    TomlValue t;
    t.kind = Kind::boolean;
    t.bool_v = v;
    return t;
}

TomlValue TomlValue::of(std::string v)
{
    TomlValue t;
    t.kind = Kind::string;
    t.string_v = std::move(v);
    return t;
}

TomlValue TomlValue::of(std::vector<TomlValue> v)
{
    TomlValue t;
    t.kind = Kind::array;
    t.array_v = std::move(v);
    return t;
}

double TomlValue::as_double() const
{
    if (kind == Kind::floating)
        return float_v;
    if (kind == Kind::integer)
        return static_cast<double>(int_v);
    throw std::runtime_error("toml: expected a numeric value");
}

long long TomlValue::as_int() const
{
    if (kind == Kind::integer)
        return int_v;
    throw std::runtime_error("toml: expected an integer value");
}

bool TomlValue::as_bool() const
{
    if (kind == Kind::boolean)
        return bool_v;
    throw std::runtime_error("toml: expected a boolean value");
}

const std::string& TomlValue::as_string() const
{
    if (kind == Kind::string)
        return string_v;
    throw std::runtime_error("toml: expected a string value");
}

void TomlDoc::set(const std::string& section, const std::string& key, TomlValue value)
{
    for (auto& [name, entries] : sections_) {
        if (name == section) {
            for (auto& [k, v] : entries) {
                if (k == key) {
                    v = std::move(value);
                    return;
                }
            }
            entries.emplace_back(key, std::move(value));
            return;
        }
    }
    sections_.emplace_back(section, Section{{key, std::move(value)}});
}

const TomlValue* TomlDoc::find(const std::string& section, const std::string& key) const
{
    for (const auto& [name, entries] : sections_)
        if (name == section)
            for (const auto& [k, v] : entries)
                if (k == key)
                    return &v;
    return nullptr;
}

double TomlDoc::get_double(const std::string& section, const std::string& key,
                           double fallback) const
{
    const TomlValue* v = find(section, key);
    return v ? v->as_double() : fallback;
}

long long TomlDoc::get_int(const std::string& section, const std::string& key,
                           long long fallback) const
{
    const TomlValue* v = find(section, key);
    return v ? v->as_int() : fallback;
}

std::string TomlDoc::get_string(const std::string& section, const std::string& key,
                                const std::string& fallback) const
{
    const TomlValue* v = find(section, key);
    return v ? v->as_string() : fallback;
}

TomlDoc TomlDoc::parse(const std::string& text)
{
    TomlDoc doc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                fail(line_no, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                fail(line_no, "empty section name");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            fail(line_no, "expected key = value");
        if (section.empty())
            fail(line_no, "key outside of a [section]");

        if (value.front() == '[') {
            if (value.back() != ']')
                fail(line_no, "arrays must be single-line");
            std::vector<TomlValue> items;
            for (const auto& item : split_array_items(value.substr(1, value.size() - 2), line_no))
                items.push_back(parse_scalar(item, line_no));
            doc.set(section, key, TomlValue::of(std::move(items)));
        } else {
            doc.set(section, key, parse_scalar(value, line_no));
        }
    }
    return doc;
}

TomlDoc TomlDoc::parse_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("toml: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string TomlDoc::dump() const
{
    std::string out;
    bool first = true;
    for (const auto& [name, entries] : sections_) {
        if (!first)
            out += '\n';
        first = false;
        out += '[';
        out += name;
        out += "]\n";
        for (const auto& [key, value] : entries) {
            out += key;
            out += " = ";
            dump_value(out, value);
            out += '\n';
        }
    }
    return out;
}

} // namespace passim::cli
