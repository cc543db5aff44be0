// SPDX-License-Identifier: Apache-2.0
//
// thzrf - performance analysis of mixed THz-RF dual-hop relay links
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
#ifndef THZRF_CONFIG_HPP
#define THZRF_CONFIG_HPP

#include "thzrf/perf.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thzrf::cli
{

/// Ordered `key = value` entries of a flat config document.
using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Reads `key = value` lines; `#` starts a comment, blank lines are skipped.
/// Throws ConfigError on malformed lines or duplicate keys, except for keys
/// listed in `repeatable`.
KeyValues read_key_values(std::istream &in, const std::string &source,
                          const std::vector<std::string> &repeatable = {});
KeyValues read_key_values_file(const std::filesystem::path &path,
                               const std::vector<std::string> &repeatable = {});

/// Scenario keys in canonical order. SNRs and gains are in dB/dBi, sigma_s in mm.
const std::vector<std::string> &scenario_keys();

/// Raw scenario values keyed by name, before unit conversion.
using ScenarioValues = std::map<std::string, std::string>;

ScenarioValues scenario_values(const KeyValues &entries, const std::string &source);

/// Converts to SI/linear units and validates. Missing keys are reported in
/// canonical order, unknown keys all at once.
perf::Scenario build_scenario(const ScenarioValues &values);

/// Parses and validates a scenario file.
perf::Scenario parse_scenario(const std::filesystem::path &path);

double db_to_linear(double db);
double linear_to_db(double linear);

/// Strict decimal parse of a full string; throws ConfigError naming `key`.
double parse_number(const std::string &key, const std::string &text);

} // namespace thzrf::cli

#endif
