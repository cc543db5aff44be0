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
#ifndef THZRF_PERF_HPP
#define THZRF_PERF_HPP

#include "thzrf/channel.hpp"

#include <functional>
#include <string>

namespace thzrf::perf
{

/// Complete dual-hop description. SNR knobs are linear ratios.
struct Scenario
{
    channel::ThzLinkParams thz;
    channel::RfLinkParams rf;
    /// Es / N_o,1 at the source.
    double es_over_no1;
    /// Er / N_o,2 at the relay.
    double er_over_no2;
    /// Outage threshold on the end-to-end SNR.
    double gamma_th;

    void validate() const;
};

/// Quantities every closed form needs, computed once per scenario.
struct LinkBudget
{
    channel::MisalignmentGeometry geom;
    double thz_gain;     // |h_l|
    double rf_gain;      // |h_g|
    double gamma1_scale; // |h_l|^2 Es/N_o,1
    double gamma2_mean;  // |h_g|^2 Er/N_o,2, mean of the exponential hop-2 SNR
};

LinkBudget link_budget(const Scenario &scenario);

enum class Scheme
{
    bpsk,
    qpsk,
    mqam
};

/// Conditional SER P_e(γ) = a Q(sqrt(2 b γ)).
struct Modulation
{
    double a;
    double b;
    Scheme scheme;
    int order;

    std::string label() const;
};

/// (a, b) pairs: BPSK (1, 1/2), QPSK (1, 1/4), M-QAM (4, 3/(M-1)).
/// M-QAM requires M >= 4 and a power of two.
Modulation modulation_constants(Scheme scheme, int order = 0);

/// Parses "bpsk", "qpsk" or "mqam:M".
Modulation parse_modulation(const std::string &text);

/// Member of the QAM family used by the M sweeps: M = 2 is BPSK, M >= 4 is M-QAM.
Modulation qam_family(int order);

double snr_cdf_hop1(double x, const Scenario &scenario);
double snr_cdf_hop2(double x, const Scenario &scenario);

/// End-to-end SNR CDF under decode-and-forward, γ_e = min(γ1, γ2), evaluated
/// as a single finite sum over the α-μ clustering index.
double e2e_snr_cdf(double x, const Scenario &scenario);

/// P[γ_e <= γ_th].
double outage_probability(const Scenario &scenario);

/// Average SER in closed form: a/2 minus a sum of μ Fox H-functions.
double average_ser_closed_form(const Scenario &scenario, const Modulation &mod);

/// Average SER by direct quadrature of ∫ F_γe(x) a sqrt(b/4π) x^(-1/2) e^(-bx) dx.
double average_ser_quadrature(const Scenario &scenario, const Modulation &mod);

/// Same integral for an arbitrary SNR CDF; used for closed-form anchors.
double average_ser_from_cdf(const std::function<double(double)> &cdf, const Modulation &mod);

} // namespace thzrf::perf

#endif
