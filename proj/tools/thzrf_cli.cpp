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
//
// Command-line front end: single-point evaluation and parameter sweeps.

#include "thzrf/channel.hpp"
#include "thzrf/config.hpp"
#include "thzrf/errors.hpp"
#include "thzrf/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace thzrf;

namespace
{

struct Flags
{
    std::string mod;
    bool quadrature = false;
    std::uint64_t mc = 0;
    std::uint64_t seed = 1;
    std::string out;
};

void add_run_flags(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--mod", f.mod, "Modulation: bpsk, qpsk or mqam:M");
    cmd->add_flag("--quadrature", f.quadrature, "Add the numerical-quadrature SER column");
    cmd->add_option("--mc", f.mc, "Monte Carlo trials per point (0 disables)");
    cmd->add_option("--seed", f.seed, "Monte Carlo seed");
}

cli::RunFlags run_flags(const Flags &f)
{
    cli::RunFlags rf;
    if (!f.mod.empty())
        rf.modulation = perf::parse_modulation(f.mod);
    rf.quadrature = f.quadrature;
    rf.mc_trials = f.mc;
    rf.seed = f.seed;
    return rf;
}

void warn_if_out_of_band(const perf::Scenario &s)
{
    const auto abs = channel::molecular_absorption(s.thz.frequency_hz, s.thz.temperature_k, s.thz.humidity_percent,
                                                   s.thz.pressure_pa);
    if (!abs.in_band)
        std::cerr << "warning: THz carrier " << cli::format_number(s.thz.frequency_hz)
                  << " Hz is outside the 275-400 GHz absorption model range\n";
}

void emit(const std::string &csv, const std::string &out)
{
    if (out.empty())
    {
        std::cout << csv;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file)
        throw Error("cannot open output file " + out);
    file << csv;
    if (!file)
        throw Error("failed writing " + out);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"thzrf: outage and SER analysis of mixed THz-RF dual-hop relay links"};
    app.require_subcommand(1);

    Flags eval_flags;
    std::string eval_cfg;
    auto *eval = app.add_subcommand("evaluate", "Evaluate one scenario");
    eval->add_option("scenario", eval_cfg, "Scenario config file")->required();
    add_run_flags(eval, eval_flags);

    Flags sweep_flags;
    std::string sweep_scenario, sweep_cfg;
    auto *sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    sweep->add_option("scenario", sweep_scenario, "Scenario config file")->required();
    sweep->add_option("sweep", sweep_cfg, "Sweep config file")->required();
    add_run_flags(sweep, sweep_flags);
    sweep->add_option("--out", sweep_flags.out, "Write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*eval)
        {
            const perf::Scenario s = cli::parse_scenario(eval_cfg);
            warn_if_out_of_band(s);
            emit(cli::evaluate(s, run_flags(eval_flags)).to_csv(), {});
        }
        else
        {
            const auto base = cli::scenario_values(cli::read_key_values_file(sweep_scenario), sweep_scenario);
            const perf::Scenario s = cli::build_scenario(base);
            warn_if_out_of_band(s);
            const auto spec = cli::parse_sweep(sweep_cfg);
            emit(cli::run_sweep(base, spec, run_flags(sweep_flags)).to_csv(), sweep_flags.out);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
