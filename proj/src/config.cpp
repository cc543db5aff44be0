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

#include "thzrf/config.hpp"

#include "thzrf/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace thzrf::cli
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Reader
{
    const ScenarioValues &values;

    double number(const std::string &key) const { return parse_number(key, values.at(key)); }

    double positive(const std::string &key) const
    {
        const double v = number(key);
        if (!(v > 0.0))
            throw ConfigError(key + " = " + values.at(key) + ": must be > 0");
        return v;
    }

    double in_range(const std::string &key, double lo, double hi) const
    {
        const double v = number(key);
        if (!(v >= lo && v <= hi))
            throw ConfigError(key + " = " + values.at(key) + ": must lie in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
        return v;
    }
};

} // namespace

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double parse_number(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto *begin = t.data();
    const auto *end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw ConfigError(key + ": '" + text + "' is not a finite number");
    return v;
}

KeyValues read_key_values(std::istream &in, const std::string &source, const std::vector<std::string> &repeatable)
{
    KeyValues out;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key");
        const bool may_repeat = std::find(repeatable.begin(), repeatable.end(), key) != repeatable.end();
        if (!seen.insert(key).second && !may_repeat)
            throw ConfigError(source + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

KeyValues read_key_values_file(const std::filesystem::path &path, const std::vector<std::string> &repeatable)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    return read_key_values(in, path.string(), repeatable);
}

const std::vector<std::string> &scenario_keys()
{
    static const std::vector<std::string> keys = {
        "thz_frequency_hz", "thz_distance_m",  "thz_tx_gain_dbi",   "thz_rx_gain_dbi",       "temperature_k",
        "humidity_percent", "pressure_pa",     "alpha",             "mu",                    "h_hat_f",
        "sigma_s_mm",       "aperture_radius_m", "beam_footprint_m", "rf_frequency_hz",      "rf_tx_gain_dbi",
        "rf_rx_gain_dbi",   "rf_distance_m",   "rf_path_loss_exponent", "es_over_no1_db",    "er_over_no2_db",
        "gamma_th_db"};
    return keys;
}

ScenarioValues scenario_values(const KeyValues &entries, const std::string &source)
{
    const auto &known = scenario_keys();
    ScenarioValues values;
    std::vector<std::string> unknown;
    for (const auto &[k, v] : entries)
    {
        if (std::find(known.begin(), known.end(), k) == known.end())
            unknown.push_back(k);
        else
            values[k] = v;
    }
    if (!unknown.empty())
    {
        std::ostringstream msg;
        msg << source << ": unknown key(s):";
        for (const auto &k : unknown)
            msg << ' ' << k;
        throw ConfigError(msg.str());
    }
    return values;
}

perf::Scenario build_scenario(const ScenarioValues &values)
{
    for (const auto &key : scenario_keys())
        if (!values.contains(key))
            throw ConfigError("missing required key '" + key + "'");

    const Reader r{values};
    perf::Scenario s{};
    s.thz.frequency_hz = r.positive("thz_frequency_hz");
    s.thz.distance_m = r.positive("thz_distance_m");
    s.thz.tx_gain = db_to_linear(r.number("thz_tx_gain_dbi"));
    s.thz.rx_gain = db_to_linear(r.number("thz_rx_gain_dbi"));
    s.thz.temperature_k = r.in_range("temperature_k", 250.0, 330.0);
    s.thz.humidity_percent = r.in_range("humidity_percent", 0.0, 100.0);
    s.thz.pressure_pa = r.positive("pressure_pa");
    s.thz.alpha = r.positive("alpha");
    s.thz.mu = r.number("mu");
    if (!(s.thz.mu >= 1.0) || s.thz.mu != std::floor(s.thz.mu))
        throw UnsupportedParameterError("mu = " + values.at("mu") +
                                        ": only positive integer mu is supported");
    s.thz.h_hat_f = r.positive("h_hat_f");
    s.thz.sigma_s_m = r.positive("sigma_s_mm") * 1e-3;
    s.thz.aperture_radius_m = r.positive("aperture_radius_m");
    s.thz.beam_footprint_m = r.positive("beam_footprint_m");

    s.rf.frequency_hz = r.positive("rf_frequency_hz");
    s.rf.tx_gain = db_to_linear(r.number("rf_tx_gain_dbi"));
    s.rf.rx_gain = db_to_linear(r.number("rf_rx_gain_dbi"));
    s.rf.distance_m = r.positive("rf_distance_m");
    s.rf.path_loss_exponent = r.in_range("rf_path_loss_exponent", 1.0, 10.0);

    s.es_over_no1 = db_to_linear(r.number("es_over_no1_db"));
    s.er_over_no2 = db_to_linear(r.number("er_over_no2_db"));
    s.gamma_th = db_to_linear(r.number("gamma_th_db"));

    try
    {
        s.validate();
    }
    catch (const ParameterError &e)
    {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
    return s;
}

perf::Scenario parse_scenario(const std::filesystem::path &path)
{
    return build_scenario(scenario_values(read_key_values_file(path), path.string()));
}

} // namespace thzrf::cli
