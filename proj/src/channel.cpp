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

#include "thzrf/channel.hpp"

#include "thzrf/errors.hpp"
#include "thzrf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace thzrf::channel
{

namespace
{

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char *name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ParameterError(std::string(name) + " must be finite and > 0");
}

// Absorption fit coefficients (κ in 1/m, frequencies in Hz, line centres in 1/cm).
constexpr double q1 = 0.2205, q2 = 0.1303, q3 = 0.0294, q4 = 0.4093, q5 = 0.0925;
constexpr double q6 = 2.014, q7 = 0.1702, q8 = 0.0303, q9 = 0.537, q10 = 0.0956;
constexpr double c1 = 5.54e-37, c2 = -3.94e-25, c3 = 9.06e-14, c4 = -6.36e-3;
constexpr double p1 = 10.835, p2 = 12.664;

} // namespace

void ThzLinkParams::validate() const
{
    require_positive(frequency_hz, "thz frequency");
    require_positive(distance_m, "thz distance");
    require_positive(tx_gain, "thz tx gain");
    require_positive(rx_gain, "thz rx gain");
    require_positive(temperature_k, "temperature");
    require_positive(pressure_pa, "pressure");
    require_positive(alpha, "alpha");
    require_positive(h_hat_f, "h_hat_f");
    require_positive(sigma_s_m, "sigma_s");
    require_positive(aperture_radius_m, "aperture radius");
    require_positive(beam_footprint_m, "beam footprint");
    if (!(humidity_percent >= 0.0 && humidity_percent <= 100.0))
        throw ParameterError("relative humidity must lie in [0, 100] percent");
    if (!(mu >= 1.0) || !std::isfinite(mu))
        throw ParameterError("mu must be finite and >= 1");
}

void RfLinkParams::validate() const
{
    require_positive(frequency_hz, "rf frequency");
    require_positive(tx_gain, "rf tx gain");
    require_positive(rx_gain, "rf rx gain");
    require_positive(distance_m, "rf distance");
    if (!(path_loss_exponent >= 1.0) || !std::isfinite(path_loss_exponent))
        throw ParameterError("rf path-loss exponent must be >= 1");
}

int integer_mu(double mu)
{
    if (!(mu >= 1.0) || mu != std::floor(mu) || mu > 1e6)
        throw UnsupportedParameterError("mu = " + std::to_string(mu) +
                                        ": only positive integer mu is supported by the finite-sum CDF");
    return static_cast<int>(mu);
}

double saturated_water_vapor_pressure(double temperature_k, double pressure_pa)
{
    if (!(temperature_k >= 250.0 && temperature_k <= 330.0))
        throw DomainError("saturated_water_vapor_pressure: T = " + std::to_string(temperature_k) +
                          " K outside the 250-330 K validity window");
    if (!(pressure_pa > 0.0))
        throw DomainError("saturated_water_vapor_pressure: pressure must be > 0");
    const double t = temperature_k - 273.15;
    return 611.21 * std::exp((18.678 - t / 234.5) * (t / (257.14 + t)));
}

Absorption molecular_absorption(double frequency_hz, double temperature_k, double humidity_percent,
                                double pressure_pa)
{
    if (!(frequency_hz > 0.0))
        throw DomainError("molecular_absorption: frequency must be > 0");
    if (!(humidity_percent >= 0.0 && humidity_percent <= 100.0))
        throw DomainError("molecular_absorption: humidity must lie in [0, 100]");

    const double v = humidity_percent / 100.0 * saturated_water_vapor_pressure(temperature_k, pressure_pa) /
                     pressure_pa;
    const double wavenumber = frequency_hz / (100.0 * kSpeedOfLight);
    const double f = frequency_hz;

    const double line1 = q1 * v * (q2 * v + q3) /
                         ((q4 * v + q5) * (q4 * v + q5) + (wavenumber - p1) * (wavenumber - p1));
    const double line2 = q6 * v * (q7 * v + q8) /
                         ((q9 * v + q10) * (q9 * v + q10) + (wavenumber - p2) * (wavenumber - p2));
    const double background = c1 * f * f * f + c2 * f * f + c3 * f + c4;

    return {line1 + line2 + background, frequency_hz >= 275e9 && frequency_hz <= 400e9};
}

double thz_path_gain(const ThzLinkParams &params)
{
    params.validate();
    const Absorption a = molecular_absorption(params.frequency_hz, params.temperature_k, params.humidity_percent,
                                              params.pressure_pa);
    const double friis = kSpeedOfLight * std::sqrt(params.tx_gain * params.rx_gain) /
                         (4.0 * kPi * params.frequency_hz * params.distance_m);
    return friis * std::exp(-0.5 * a.kappa_per_m * params.distance_m);
}

MisalignmentGeometry misalignment_geometry(const ThzLinkParams &params)
{
    require_positive(params.aperture_radius_m, "aperture radius");
    require_positive(params.beam_footprint_m, "beam footprint");
    require_positive(params.sigma_s_m, "sigma_s");

    MisalignmentGeometry g{};
    g.zeta = std::sqrt(kPi / 2.0) * params.aperture_radius_m / params.beam_footprint_m;
    const double e = std::erf(g.zeta);
    g.s0 = e * e;
    // exp(+zeta^2) instead of dividing by exp(-zeta^2); w_e grows without bound with zeta.
    const double w_e2 = params.beam_footprint_m * params.beam_footprint_m * std::sqrt(kPi) * e *
                        std::exp(g.zeta * g.zeta) / (2.0 * g.zeta);
    g.w_e = std::sqrt(w_e2);
    g.phi = w_e2 / (2.0 * params.sigma_s_m * params.sigma_s_m);
    return g;
}

double power_times_upper_gamma(double p, double a, double x)
{
    if (x == 0.0)
    {
        if (p + a > 0.0 && a > 0.0)
            return p > 0.0 ? 0.0 : std::tgamma(a);
        if (p + a > 0.0)
            return 0.0;
        if (p + a == 0.0 && a < 0.0)
            return -1.0 / a;
        throw DivergenceError("power_times_upper_gamma: x^p Γ(a, x) diverges at x = 0");
    }
    if (a > 0.0)
        return std::exp(p * std::log(x)) * specfun::upper_incomplete_gamma(a, x);
    // Γ(a, x) = x^a e^-x U(a, x) with U = O(1).
    const double u = specfun::upper_incomplete_gamma_scaled(a, x);
    return std::exp((p + a) * std::log(x) - x) * u;
}

double hpf_pdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("hpf_pdf: x must be finite and > 0");
    require_positive(params.alpha, "alpha");
    require_positive(params.h_hat_f, "h_hat_f");
    require_positive(geom.phi, "phi");
    require_positive(geom.s0, "S0");
    if (!(params.mu > 0.0))
        throw ParameterError("mu must be > 0");

    // f(x) = φ S0^-φ μ^(φ/α) x^(φ-1) Γ(μ - φ/α, y) / (h^φ Γ(μ)),  y = μ (x / (h S0))^α
    //      = (φ / x) y^(φ/α) Γ(μ - φ/α, y) / Γ(μ).
    const double beta = geom.phi / params.alpha;
    const double y = params.mu * std::pow(x / (params.h_hat_f * geom.s0), params.alpha);
    const double core = power_times_upper_gamma(beta, params.mu - beta, y);
    return geom.phi / x * core * std::exp(-std::lgamma(params.mu));
}

double hpf_ccdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params)
{
    if (!(x >= 0.0) || std::isnan(x))
        throw DomainError("hpf_cdf: x must be >= 0");
    const int mu = integer_mu(params.mu);
    require_positive(params.alpha, "alpha");
    require_positive(params.h_hat_f, "h_hat_f");
    require_positive(geom.phi, "phi");
    require_positive(geom.s0, "S0");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;

    // 1 - F(x) = (φ/α) (x / (h S0))^φ Σ_k μ^(φ/α) / k! Γ(k - φ/α, y)
    //          = (φ/α) Σ_k y^(φ/α) Γ(k - φ/α, y) / k!
    const double beta = geom.phi / params.alpha;
    const double y = params.mu * std::pow(x / (params.h_hat_f * geom.s0), params.alpha);
    double sum = 0.0;
    double log_factorial = 0.0;
    for (int k = 0; k < mu; ++k)
    {
        if (k > 0)
            log_factorial += std::log(static_cast<double>(k));
        sum += power_times_upper_gamma(beta, k - beta, y) * std::exp(-log_factorial);
    }
    return std::clamp(beta * sum, 0.0, 1.0);
}

double hpf_cdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params)
{
    return 1.0 - hpf_ccdf(x, geom, params);
}

double rf_path_gain(const RfLinkParams &params)
{
    params.validate();
    const double xi = kSpeedOfLight * std::sqrt(params.tx_gain * params.rx_gain) / (4.0 * kPi * params.frequency_hz);
    return xi * std::pow(params.distance_m, -params.path_loss_exponent / 2.0);
}

} // namespace thzrf::channel
