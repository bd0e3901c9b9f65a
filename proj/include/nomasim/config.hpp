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

#ifndef NOMASIM_CONFIG_HPP
#define NOMASIM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace nomasim
{

// Flat `key = value` configuration text: one assignment per line, dotted
// section names in keys, '#' starts a comment, blank lines ignored,
// duplicate keys rejected. Lists are comma-separated within the value.
std::map<std::string, std::string> parse_key_values(const std::string &text);

/*!
 * Typed, consume-tracking view over parsed key/value pairs. Every lookup
 * marks its key; finish() rejects unconsumed (unknown) keys so config typos
 * fail before any computation starts. All parse errors throw config_error
 * naming the offending key.
 */
class ConfigView
{
  public:
    explicit ConfigView(std::map<std::string, std::string> values);

    bool has(const std::string &key) const;

    std::string get_string(const std::string &key);
    std::string get_string(const std::string &key, const std::string &fallback);

    double get_double(const std::string &key);
    double get_double(const std::string &key, double fallback);

    std::uint64_t get_u64(const std::string &key);
    std::uint64_t get_u64(const std::string &key, std::uint64_t fallback);

    bool get_bool(const std::string &key, bool fallback);

    std::vector<double> get_double_list(const std::string &key);

    // Throws config_error listing any keys never consumed.
    void finish() const;

  private:
    const std::string &raw(const std::string &key);

    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

} // namespace nomasim

#endif
