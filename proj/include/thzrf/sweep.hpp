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
#ifndef THZRF_SWEEP_HPP
#define THZRF_SWEEP_HPP

#include "thzrf/config.hpp"
#include "thzrf/mc.hpp"
#include "thzrf/perf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thzrf::cli
{

enum class Axis
{
    es_over_no1_db,
    er_over_no2_db,
    sigma_s_mm,
    modulation_order
};

std::string axis_name(Axis axis);

/// One plotted series: scenario-key overrides plus an optional modulation.
struct Overlay
{
    std::string label;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::optional<std::string> modulation;
};

struct SweepSpec
{
    Axis axis = Axis::es_over_no1_db;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    /// SNR keys are ratios over gamma_th, in dB.
    bool relative_to_gamma_th = false;
    std::vector<Overlay> overlays;

    /// Grid in display units. For the M axis: powers of two, step = log2 increment.
    std::vector<double> grid() const;
};

/// Parses a sweep file: axis, start, stop, step, optional relative_to_gamma_th
/// and any number of `overlay = key=value, key=value` lines.
SweepSpec parse_sweep(const std::filesystem::path &path);
SweepSpec parse_sweep(const KeyValues &entries, const std::string &source);

struct RunFlags
{
    std::optional<perf::Modulation> modulation;
    bool quadrature = false;
    std::uint64_t mc_trials = 0;
    std::uint64_t seed = 1;
};

struct ResultRow
{
    std::string series;
    double axis_value = 0.0;
    double op = 0.0;
    std::optional<double> ser;
    std::optional<double> ser_quadrature;
    std::optional<mc::Estimate> mc_op;
    std::optional<mc::Estimate> mc_ser;
};

struct ResultTable
{
    /// Empty for single-point evaluations (no series/axis columns).
    std::string axis;
    bool has_ser = false;
    bool has_quadrature = false;
    bool has_mc = false;
    std::vector<ResultRow> rows;

    std::vector<std::string> header() const;
    /// RFC 4180 CSV, '.' decimal separator, 12 significant digits.
    std::string to_csv() const;
};

/// Closed-form/quadrature mismatch that a sweep treats as fatal.
inline constexpr double kSerCrossCheckTolerance = 1e-4;

/// Evaluates OP (always), SER when a modulation is given, plus optional
/// quadrature and Monte Carlo columns. Throws on quadrature mismatch.
ResultRow run_point(const perf::Scenario &scenario, const std::optional<perf::Modulation> &mod,
                    const RunFlags &flags, std::uint64_t point_index = 0);

ResultTable evaluate(const perf::Scenario &scenario, const RunFlags &flags);

/// Runs every (overlay, grid value) point, overlay-major. Points run in
/// parallel; any failure throws naming the first failing point in order.
ResultTable run_sweep(const ScenarioValues &base, const SweepSpec &sweep, const RunFlags &flags);

std::string format_number(double v);

} // namespace thzrf::cli

#endif
