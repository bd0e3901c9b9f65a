// SPDX-License-Identifier: Apache-2.0
//
// noma-sim: link-level simulation library for power-domain NOMA
// Copyright (C) 2026 the noma-sim authors
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

#include "nomasim/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "nomasim/common.hpp"

namespace nomasim
{

namespace
{

std::string trim(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string &key, const std::string &text)
{
    double v = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
        throw config_error("Key '" + key + "': '" + text + "' is not a finite number.");
    return v;
}

std::uint64_t parse_u64(const std::string &key, const std::string &text)
{
    std::uint64_t v = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw config_error("Key '" + key + "': '" + text + "' is not an unsigned integer.");
    return v;
}

} // namespace

std::map<std::string, std::string> parse_key_values(const std::string &text)
{
    std::map<std::string, std::string> values;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("Line " + std::to_string(line_no) + ": expected 'key = value'.");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("Line " + std::to_string(line_no) + ": empty key.");
        if (values.count(key))
            throw config_error("Duplicate key '" + key + "'.");
        values[key] = value;
    }
    return values;
}

ConfigView::ConfigView(std::map<std::string, std::string> values) : values_(std::move(values)) {}

bool ConfigView::has(const std::string &key) const
{
    return values_.count(key) != 0;
}

const std::string &ConfigView::raw(const std::string &key)
{
    const auto it = values_.find(key);
    if (it == values_.end())
        throw config_error("Missing required key '" + key + "'.");
    consumed_.insert(key);
    return it->second;
}

std::string ConfigView::get_string(const std::string &key)
{
    return raw(key);
}

std::string ConfigView::get_string(const std::string &key, const std::string &fallback)
{
    return has(key) ? raw(key) : fallback;
}

double ConfigView::get_double(const std::string &key)
{
    return parse_double(key, raw(key));
}

double ConfigView::get_double(const std::string &key, double fallback)
{
    return has(key) ? get_double(key) : fallback;
}

std::uint64_t ConfigView::get_u64(const std::string &key)
{
    return parse_u64(key, raw(key));
}

std::uint64_t ConfigView::get_u64(const std::string &key, std::uint64_t fallback)
{
    return has(key) ? get_u64(key) : fallback;
}

bool ConfigView::get_bool(const std::string &key, bool fallback)
{
    if (!has(key))
        return fallback;
    const std::string v = raw(key);
    if (v == "1" || v == "true")
        return true;
    if (v == "0" || v == "false")
        return false;
    throw config_error("Key '" + key + "': expected true/false/1/0, got '" + v + "'.");
}

std::vector<double> ConfigView::get_double_list(const std::string &key)
{
    const std::string text = raw(key);
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto comma = text.find(',', pos);
        const std::string item = trim(text.substr(pos, comma == std::string::npos
                                                           ? std::string::npos
                                                           : comma - pos));
        if (item.empty())
            throw config_error("Key '" + key + "': empty list element.");
        out.push_back(parse_double(key, item));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw config_error("Key '" + key + "': empty list.");
    return out;
}

void ConfigView::finish() const
{
    std::string unknown;
    for (const auto &[key, value] : values_)
    {
        if (!consumed_.count(key))
        {
            if (!unknown.empty())
                unknown += ", ";
            unknown += "'" + key + "'";
        }
    }
    if (!unknown.empty())
        throw config_error("Unknown key(s): " + unknown + ".");
}

} // namespace nomasim
