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

#include "thzrf/sweep.hpp"

#include "thzrf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace thzrf::cli
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

Overlay parse_overlay(const std::string &text, const std::string &source)
{
    Overlay o;
    std::stringstream ss(text);
    std::string item;
    std::string label;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ": overlay entry '" + item + "' is not key=value");
        const std::string key = trim(item.substr(0, eq));
        const std::string value = trim(item.substr(eq + 1));
        if (key == "mod")
        {
            perf::parse_modulation(value);
            o.modulation = value;
        }
        else
        {
            const auto &known = scenario_keys();
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw ConfigError(source + ": overlay key '" + key + "' is not a scenario key");
            o.overrides.emplace_back(key, value);
        }
        label += (label.empty() ? "" : ";") + key + "=" + value;
    }
    o.label = label.empty() ? "base" : label;
    return o;
}

bool is_power_of_two(double v)
{
    return v >= 1.0 && v == std::floor(v) && (static_cast<long long>(v) & (static_cast<long long>(v) - 1)) == 0;
}

} // namespace

std::string axis_name(Axis axis)
{
    switch (axis)
    {
    case Axis::es_over_no1_db:
        return "es_over_no1_db";
    case Axis::er_over_no2_db:
        return "er_over_no2_db";
    case Axis::sigma_s_mm:
        return "sigma_s_mm";
    case Axis::modulation_order:
        return "M";
    }
    return "?";
}

std::vector<double> SweepSpec::grid() const
{
    std::vector<double> g;
    if (axis == Axis::modulation_order)
    {
        const double lo = std::log2(start);
        const double hi = std::log2(stop);
        for (int i = 0;; ++i)
        {
            const double e = lo + i * step;
            if (e > hi + 1e-9)
                break;
            g.push_back(std::round(std::exp2(e)));
        }
        return g;
    }
    const double slack = 1e-9 * step;
    for (long i = 0;; ++i)
    {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + slack)
            break;
        g.push_back(v);
    }
    return g;
}

SweepSpec parse_sweep(const KeyValues &entries, const std::string &source)
{
    SweepSpec spec;
    bool have_axis = false, have_start = false, have_stop = false, have_step = false;
    for (const auto &[key, value] : entries)
    {
        if (key == "axis")
        {
            have_axis = true;
            if (value == "es_over_no1_db")
                spec.axis = Axis::es_over_no1_db;
            else if (value == "er_over_no2_db")
                spec.axis = Axis::er_over_no2_db;
            else if (value == "sigma_s_mm")
                spec.axis = Axis::sigma_s_mm;
            else if (value == "M")
                spec.axis = Axis::modulation_order;
            else
                throw ConfigError(source + ": unknown axis '" + value + "'");
        }
        else if (key == "start")
        {
            have_start = true;
            spec.start = parse_number(key, value);
        }
        else if (key == "stop")
        {
            have_stop = true;
            spec.stop = parse_number(key, value);
        }
        else if (key == "step")
        {
            have_step = true;
            spec.step = parse_number(key, value);
        }
        else if (key == "relative_to_gamma_th")
        {
            if (value != "true" && value != "false")
                throw ConfigError(source + ": relative_to_gamma_th must be true or false");
            spec.relative_to_gamma_th = value == "true";
        }
        else if (key == "overlay")
        {
            spec.overlays.push_back(parse_overlay(value, source));
        }
        else
        {
            throw ConfigError(source + ": unknown sweep key '" + key + "'");
        }
    }
    if (!have_axis)
        throw ConfigError(source + ": missing required key 'axis'");
    if (!have_start)
        throw ConfigError(source + ": missing required key 'start'");
    if (!have_stop)
        throw ConfigError(source + ": missing required key 'stop'");
    if (!have_step)
        throw ConfigError(source + ": missing required key 'step'");
    if (!(spec.step > 0.0))
        throw ConfigError(source + ": step must be > 0");
    if (!(spec.start < spec.stop))
        throw ConfigError(source + ": start must be < stop");
    if (spec.axis == Axis::modulation_order && !(is_power_of_two(spec.start) && is_power_of_two(spec.stop) &&
                                                 spec.start >= 2.0 && spec.step == std::floor(spec.step)))
        throw ConfigError(source + ": M axis needs power-of-two start/stop >= 2 and an integer log2 step");
    if (spec.axis == Axis::sigma_s_mm && !(spec.start > 0.0))
        throw ConfigError(source + ": sigma_s_mm axis must start above 0");
    if (spec.overlays.empty())
        spec.overlays.push_back(Overlay{"base", {}, std::nullopt});
    return spec;
}

SweepSpec parse_sweep(const std::filesystem::path &path)
{
    return parse_sweep(read_key_values_file(path, {"overlay"}), path.string());
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> ResultTable::header() const
{
    std::vector<std::string> h;
    if (!axis.empty())
    {
        h.push_back("series");
        h.push_back(axis);
    }
    h.push_back("op");
    if (has_ser)
        h.push_back("ser");
    if (has_ser && has_quadrature)
        h.push_back("ser_quadrature");
    if (has_mc)
    {
        h.insert(h.end(), {"mc_op", "mc_op_stderr", "mc_op_n"});
        if (has_ser)
            h.insert(h.end(), {"mc_ser", "mc_ser_stderr", "mc_ser_n"});
    }
    return h;
}

std::string ResultTable::to_csv() const
{
    std::ostringstream out;
    const auto h = header();
    for (std::size_t i = 0; i < h.size(); ++i)
        out << (i ? "," : "") << csv_field(h[i]);
    out << "\r\n";
    for (const auto &row : rows)
    {
        std::vector<std::string> f;
        if (!axis.empty())
        {
            f.push_back(csv_field(row.series));
            f.push_back(format_number(row.axis_value));
        }
        f.push_back(format_number(row.op));
        if (has_ser)
            f.push_back(format_number(row.ser.value()));
        if (has_ser && has_quadrature)
            f.push_back(format_number(row.ser_quadrature.value()));
        if (has_mc)
        {
            f.push_back(format_number(row.mc_op->value));
            f.push_back(format_number(row.mc_op->std_error));
            f.push_back(std::to_string(row.mc_op->n));
            if (has_ser)
            {
                f.push_back(format_number(row.mc_ser->value));
                f.push_back(format_number(row.mc_ser->std_error));
                f.push_back(std::to_string(row.mc_ser->n));
            }
        }
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? "," : "") << f[i];
        out << "\r\n";
    }
    return out.str();
}

ResultRow run_point(const perf::Scenario &scenario, const std::optional<perf::Modulation> &mod,
                    const RunFlags &flags, std::uint64_t point_index)
{
    ResultRow row;
    row.op = perf::outage_probability(scenario);
    if (mod)
    {
        row.ser = perf::average_ser_closed_form(scenario, *mod);
        if (flags.quadrature)
        {
            row.ser_quadrature = perf::average_ser_quadrature(scenario, *mod);
            const double rel = std::fabs(*row.ser - *row.ser_quadrature) / *row.ser_quadrature;
            if (!(rel <= kSerCrossCheckTolerance))
                throw ConvergenceError("closed-form SER " + format_number(*row.ser) + " and quadrature " +
                                           format_number(*row.ser_quadrature) + " differ by " +
                                           format_number(rel) + " relative",
                                       rel);
        }
    }
    if (flags.mc_trials > 0)
    {
        const std::uint64_t base = mix(flags.seed ^ mix(point_index));
        row.mc_op = mc::simulate_op(scenario, flags.mc_trials, mc::RngSeed{base});
        if (mod)
            row.mc_ser = mc::simulate_ser(scenario, *mod, flags.mc_trials, mc::RngSeed{mix(base + 1)});
    }
    for (double v : {row.op, row.ser.value_or(0.0), row.ser_quadrature.value_or(0.0)})
        if (!std::isfinite(v))
            throw ConvergenceError("non-finite result", v);
    return row;
}

ResultTable evaluate(const perf::Scenario &scenario, const RunFlags &flags)
{
    ResultTable t;
    t.has_ser = flags.modulation.has_value();
    t.has_quadrature = flags.quadrature;
    t.has_mc = flags.mc_trials > 0;
    t.rows.push_back(run_point(scenario, flags.modulation, flags, 0));
    return t;
}

ResultTable run_sweep(const ScenarioValues &base, const SweepSpec &sweep, const RunFlags &flags)
{
    struct Point
    {
        std::string series;
        double axis_value;
        ScenarioValues values;
        std::optional<perf::Modulation> mod;
    };

    const auto grid = sweep.grid();
    std::vector<Point> points;
    bool any_mod = false, all_mod = true;
    for (const auto &overlay : sweep.overlays)
    {
        for (double v : grid)
        {
            Point p{overlay.label, v, base, flags.modulation};
            for (const auto &[key, value] : overlay.overrides)
                p.values[key] = value;
            if (overlay.modulation)
                p.mod = perf::parse_modulation(*overlay.modulation);
            switch (sweep.axis)
            {
            case Axis::es_over_no1_db:
                p.values["es_over_no1_db"] = format_number(v);
                break;
            case Axis::er_over_no2_db:
                p.values["er_over_no2_db"] = format_number(v);
                break;
            case Axis::sigma_s_mm:
                p.values["sigma_s_mm"] = format_number(v);
                break;
            case Axis::modulation_order:
                p.mod = perf::qam_family(static_cast<int>(v));
                break;
            }
            if (sweep.relative_to_gamma_th)
            {
                const double gth = parse_number("gamma_th_db", p.values.at("gamma_th_db"));
                for (const char *key : {"es_over_no1_db", "er_over_no2_db"})
                    p.values[key] = format_number(parse_number(key, p.values.at(key)) + gth);
            }
            any_mod = any_mod || p.mod.has_value();
            all_mod = all_mod && p.mod.has_value();
            points.push_back(std::move(p));
        }
    }
    if (any_mod && !all_mod)
        throw ConfigError("sweep: either every series or none must carry a modulation");

    ResultTable table;
    table.axis = axis_name(sweep.axis);
    table.has_ser = any_mod;
    table.has_quadrature = flags.quadrature;
    table.has_mc = flags.mc_trials > 0;
    table.rows.resize(points.size());

    std::vector<std::string> errors(points.size());
    const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
    {
        const auto idx = static_cast<std::size_t>(i);
        try
        {
            const perf::Scenario s = build_scenario(points[idx].values);
            table.rows[idx] = run_point(s, points[idx].mod, flags, idx);
            table.rows[idx].series = points[idx].series;
            table.rows[idx].axis_value = points[idx].axis_value;
        }
        catch (const std::exception &e)
        {
            errors[idx] = e.what();
        }
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!errors[i].empty())
            throw Error("sweep point failed (series '" + points[i].series + "', " + table.axis + " = " +
                        format_number(points[i].axis_value) + "): " + errors[i]);
    return table;
}

} // namespace thzrf::cli
