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

#include "thzrf/perf.hpp"

#include "thzrf/errors.hpp"
#include "thzrf/fox_h.hpp"
#include "thzrf/specfun.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace thzrf::perf
{

namespace
{

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char *name)
{
    if (!(v > 0.0) || std::isnan(v))
        throw ParameterError(std::string(name) + " must be > 0");
}

// log(y^p Γ(a, y)) for y >= 0 (a > 0 when y = 0). For a <= 0 the powers of y
// are combined before exponentiation so nothing large has to cancel.
double log_power_upper_gamma(double p, double a, double log_y, double y)
{
    if (a > 0.0)
        return p * log_y + (y == 0.0 ? std::lgamma(a) : std::log(specfun::upper_incomplete_gamma(a, y)));
    return (p + a) * log_y - y + std::log(specfun::upper_incomplete_gamma_scaled(a, y));
}

} // namespace

void Scenario::validate() const
{
    thz.validate();
    rf.validate();
    require_positive(es_over_no1, "Es/No,1");
    require_positive(er_over_no2, "Er/No,2");
    if (!(gamma_th >= 0.0) || !std::isfinite(gamma_th))
        throw ParameterError("gamma_th must be finite and >= 0");
}

LinkBudget link_budget(const Scenario &scenario)
{
    scenario.validate();
    LinkBudget lb{};
    lb.geom = channel::misalignment_geometry(scenario.thz);
    lb.thz_gain = channel::thz_path_gain(scenario.thz);
    lb.rf_gain = channel::rf_path_gain(scenario.rf);
    lb.gamma1_scale = lb.thz_gain * lb.thz_gain * scenario.es_over_no1;
    lb.gamma2_mean = lb.rf_gain * lb.rf_gain * scenario.er_over_no2;
    return lb;
}

std::string Modulation::label() const
{
    switch (scheme)
    {
    case Scheme::bpsk:
        return "BPSK";
    case Scheme::qpsk:
        return "QPSK";
    case Scheme::mqam:
        return std::to_string(order) + "-QAM";
    }
    return "?";
}

Modulation modulation_constants(Scheme scheme, int order)
{
    switch (scheme)
    {
    case Scheme::bpsk:
        return {1.0, 0.5, scheme, 2};
    case Scheme::qpsk:
        return {1.0, 0.25, scheme, 4};
    case Scheme::mqam:
        if (order < 4 || (order & (order - 1)) != 0)
            throw ParameterError("M-QAM order must be a power of two >= 4, got " + std::to_string(order));
        return {4.0, 3.0 / (order - 1.0), scheme, order};
    }
    throw ParameterError("unknown modulation scheme");
}

Modulation parse_modulation(const std::string &text)
{
    if (text == "bpsk")
        return modulation_constants(Scheme::bpsk);
    if (text == "qpsk")
        return modulation_constants(Scheme::qpsk);
    if (text.rfind("mqam:", 0) == 0)
    {
        std::size_t used = 0;
        int order = 0;
        try
        {
            order = std::stoi(text.substr(5), &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (used == 0 || used != text.size() - 5)
            throw ParameterError("bad M-QAM order in '" + text + "'");
        return modulation_constants(Scheme::mqam, order);
    }
    throw ParameterError("unknown modulation '" + text + "' (expected bpsk, qpsk or mqam:M)");
}

Modulation qam_family(int order)
{
    return order == 2 ? modulation_constants(Scheme::bpsk) : modulation_constants(Scheme::mqam, order);
}

double snr_cdf_hop1(double x, const Scenario &scenario)
{
    if (!(x >= 0.0))
        throw DomainError("snr_cdf_hop1: x must be >= 0");
    const LinkBudget lb = link_budget(scenario);
    return channel::hpf_cdf(std::sqrt(x / lb.gamma1_scale), lb.geom, scenario.thz);
}

double snr_cdf_hop2(double x, const Scenario &scenario)
{
    if (!(x >= 0.0))
        throw DomainError("snr_cdf_hop2: x must be >= 0");
    const LinkBudget lb = link_budget(scenario);
    return -std::expm1(-x / lb.gamma2_mean);
}

namespace
{

// Closed-form e2e CDF for a precomputed budget:
//   F(x) = 1 - (φ/α) (1/(S0² h² γ̄1))^(φ/2) Σ_k μ^(φ/α)/k! x^(φ/2) e^(-x/γ̄2) Γ((αk-φ)/α, y),
//   y = μ (x/γ̄1)^(α/2) / (h S0)^α.
double e2e_cdf(double x, const Scenario &s, const LinkBudget &lb)
{
    if (!(x >= 0.0) || std::isnan(x))
        throw DomainError("e2e_snr_cdf: x must be >= 0");
    const int mu = channel::integer_mu(s.thz.mu);
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;

    const double alpha = s.thz.alpha;
    const double phi = lb.geom.phi;
    const double beta = phi / alpha;
    const double log_hs0 = std::log(s.thz.h_hat_f * lb.geom.s0);
    const double log_x = std::log(x);
    const double log_y = std::log(s.thz.mu) + 0.5 * alpha * (log_x - std::log(lb.gamma1_scale)) - alpha * log_hs0;
    const double y = std::exp(log_y);

    // 1 - F = e^(-x/γ2) β Σ_k y^β Γ(k - β, y) / k!
    const double log_prefactor = std::log(beta) - x / lb.gamma2_mean;
    double survival = 0.0;
    for (int k = 0; k < mu; ++k)
        survival += std::exp(log_prefactor - std::lgamma(k + 1.0) + log_power_upper_gamma(beta, k - beta, log_y, y));
    return std::clamp(1.0 - survival, 0.0, 1.0);
}

} // namespace

double e2e_snr_cdf(double x, const Scenario &scenario)
{
    return e2e_cdf(x, scenario, link_budget(scenario));
}

double outage_probability(const Scenario &scenario)
{
    return e2e_snr_cdf(scenario.gamma_th, scenario);
}

double average_ser_closed_form(const Scenario &scenario, const Modulation &mod)
{
    require_positive(mod.a, "modulation a");
    require_positive(mod.b, "modulation b");
    const LinkBudget lb = link_budget(scenario);
    const int mu = channel::integer_mu(scenario.thz.mu);

    const double alpha = scenario.thz.alpha;
    const double phi = lb.geom.phi;
    const double beta = phi / alpha;
    const double log_mu = std::log(scenario.thz.mu);
    const double log_hs0 = std::log(scenario.thz.h_hat_f * lb.geom.s0);
    const double log_g1 = std::log(lb.gamma1_scale);
    // N_o,2 / (|h_g|^2 Er) + b
    const double rate = 1.0 / lb.gamma2_mean + mod.b;
    const double log_rate = std::log(rate);

    const double log_z = log_mu - 0.5 * alpha * log_g1 - alpha * log_hs0 - 0.5 * alpha * log_rate;
    const double log_scale = std::log(mod.a * std::sqrt(mod.b / (4.0 * kPi)) * beta) + beta * log_mu -
                             0.5 * phi * (2.0 * log_hs0 + log_g1) - 0.5 * (phi + 1.0) * log_rate;

    specfun::FoxHParams params;
    params.m = 2;
    params.n = 2;
    params.upper = {{-0.5 * (phi + 1.0), 0.5 * alpha}, {0.5 * (1.0 - phi), 0.5 * alpha}, {1.0, 1.0}};

    double sum = 0.0;
    std::ostringstream diagnostics;
    bool failed = false;
    double worst = 0.0;
    for (int k = 0; k < mu; ++k)
    {
        params.lower = {{(alpha * k - phi) / alpha, 1.0}, {0.0, 1.0}, {-0.5 * (phi + 1.0), 0.5 * alpha}};
        try
        {
            sum += specfun::fox_h_scaled(params, log_z, log_scale - std::lgamma(k + 1.0)).value;
        }
        catch (const ConvergenceError &e)
        {
            failed = true;
            worst = std::max(worst, e.achieved_error());
            diagnostics << " [k=" << k << ": " << e.what() << "]";
        }
        catch (const ParameterError &e)
        {
            throw ParameterError(std::string("average_ser_closed_form: k=") + std::to_string(k) + ": " + e.what());
        }
    }
    if (failed)
        throw ConvergenceError("average_ser_closed_form: Fox H evaluation failed" + diagnostics.str(), worst);

    const double ser = 0.5 * mod.a - sum;
    if (!(ser > 0.0))
        throw ConvergenceError("average_ser_closed_form: result " + std::to_string(ser) +
                                   " lost all precision to cancellation against a/2",
                               std::fabs(ser));
    return std::min(ser, 0.5 * mod.a);
}

double average_ser_from_cdf(const std::function<double(double)> &cdf, const Modulation &mod)
{
    require_positive(mod.a, "modulation a");
    require_positive(mod.b, "modulation b");
    // x = u^2 removes the x^(-1/2) endpoint singularity:
    //   ∫ F(x) a sqrt(b/4π) x^(-1/2) e^(-bx) dx = ∫ F(u^2) a sqrt(b/π) e^(-b u^2) du.
    const double weight = mod.a * std::sqrt(mod.b / kPi);
    auto integrand = [&](double u) {
        const double x = u * u;
        if (!std::isfinite(x))
            return 0.0;
        const double w = std::exp(-mod.b * x);
        return w == 0.0 ? 0.0 : cdf(x) * weight * w;
    };

    boost::math::quadrature::exp_sinh<double> integrator(12);
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-13,
                                              &error, &l1);
    if (!(error <= 1e-10) || !(error <= 1e-9 * std::fabs(value) || value == 0.0))
        throw ConvergenceError("average_ser_quadrature: error estimate " + std::to_string(error) +
                                   " above tolerance for value " + std::to_string(value),
                               error);
    return value;
}

double average_ser_quadrature(const Scenario &scenario, const Modulation &mod)
{
    const LinkBudget lb = link_budget(scenario);
    channel::integer_mu(scenario.thz.mu);
    return average_ser_from_cdf([&](double x) { return e2e_cdf(x, scenario, lb); }, mod);
}

} // namespace thzrf::perf
