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

#include "test_support.hpp"

#include "thzrf/channel.hpp"
#include "thzrf/errors.hpp"
#include "thzrf/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace thzrf;
using namespace thzrf::channel;
using thzrf::testing::baseline;
using thzrf::testing::rel_err;

namespace
{

ThzLinkParams wide_aperture(double aperture_m, double sigma_m)
{
    ThzLinkParams p = baseline().thz;
    p.aperture_radius_m = aperture_m;
    p.beam_footprint_m = 0.05;
    p.sigma_s_m = sigma_m;
    return p;
}

double integrate(const auto &f, double lo, double hi)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

} // namespace

TEST_SUITE("channel")
{
    TEST_CASE("Buck vapour pressure")
    {
        CHECK(rel_err(saturated_water_vapor_pressure(296.0, 101325.0), 2784.4372230416720519) < 1e-13);
        CHECK(saturated_water_vapor_pressure(273.15, 101325.0) == doctest::Approx(611.21).epsilon(1e-14));
        CHECK(saturated_water_vapor_pressure(300.0, 101325.0) > saturated_water_vapor_pressure(290.0, 101325.0));
        CHECK_THROWS_AS(saturated_water_vapor_pressure(249.0, 101325.0), DomainError);
        CHECK_THROWS_AS(saturated_water_vapor_pressure(331.0, 101325.0), DomainError);
    }

    TEST_CASE("molecular absorption")
    {
        const auto base = molecular_absorption(275e9, 296.0, 50.0, 101325.0);
        CHECK(base.in_band);
        CHECK(rel_err(base.kappa_per_m, 0.00038835772006764442019) < 1e-12);
        const auto dry = molecular_absorption(275e9, 296.0, 0.0, 101325.0);
        CHECK(rel_err(dry.kappa_per_m, 0.00028021875) < 1e-12);
        CHECK(base.kappa_per_m > molecular_absorption(275e9, 296.0, 10.0, 101325.0).kappa_per_m);
        CHECK_FALSE(molecular_absorption(275e12, 296.0, 50.0, 101325.0).in_band);
        CHECK_FALSE(molecular_absorption(200e9, 296.0, 50.0, 101325.0).in_band);
        CHECK(molecular_absorption(400e9, 296.0, 50.0, 101325.0).in_band);
        const auto again = molecular_absorption(275e9, 296.0, 50.0, 101325.0);
        CHECK(again.kappa_per_m == base.kappa_per_m);
    }

    TEST_CASE("THz path gain")
    {
        const ThzLinkParams p = baseline().thz;
        CHECK(rel_err(thz_path_gain(p), 1.3663486538708297729) < 1e-12);

        ThzLinkParams unit = p;
        unit.tx_gain = unit.rx_gain = 1.0;
        unit.humidity_percent = 0.0;
        const double kappa = molecular_absorption(p.frequency_hz, p.temperature_k, 0.0, p.pressure_pa).kappa_per_m;
        const double friis = kSpeedOfLight / (4.0 * std::numbers::pi * p.frequency_hz * p.distance_m);
        CHECK(rel_err(thz_path_gain(unit), friis * std::exp(-0.5 * kappa * p.distance_m)) < 1e-14);

        double prev = std::numeric_limits<double>::infinity();
        for (double d = 1.0; d <= 200.0; d *= 1.3)
        {
            unit.distance_m = d;
            const double g = thz_path_gain(unit);
            CHECK(g < prev);
            prev = g;
        }
    }

    TEST_CASE("misalignment geometry")
    {
        const auto g = misalignment_geometry(wide_aperture(0.05, 0.01));
        CHECK(rel_err(g.zeta, 1.2533141373155002512) < 1e-14);
        CHECK(rel_err(g.s0, 0.85318612892357870633) < 1e-12);
        CHECK(rel_err(g.w_e * g.w_e, 0.0078547990839938343564) < 1e-12);
        CHECK(rel_err(g.phi, 39.273995419969171782) < 1e-12);
        CHECK(g.w_e >= 0.05);

        const auto doubled = misalignment_geometry(wide_aperture(0.05, 0.02));
        CHECK(rel_err(doubled.phi, g.phi / 4.0) < 1e-14);
        CHECK(doubled.s0 == g.s0);
        CHECK(doubled.w_e == g.w_e);

        CHECK(misalignment_geometry(wide_aperture(0.5, 0.01)).s0 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(rel_err(misalignment_geometry(baseline().thz).phi, 6.2838392671950674851) < 1e-12);
    }

    TEST_CASE("RF path gain")
    {
        const RfLinkParams rf = baseline().rf;
        const double xi = kSpeedOfLight / (4.0 * std::numbers::pi * 800e6);
        CHECK(rel_err(xi, 0.029820907245230889118) < 1e-14);
        CHECK(rel_err(rf_path_gain(rf), xi) < 1e-14);

        RfLinkParams far = rf;
        far.distance_m *= 2.0;
        CHECK(rel_err(rf_path_gain(far), 0.5 * rf_path_gain(rf)) < 1e-14);

        RfLinkParams gained = rf;
        gained.tx_gain = 4.0;
        gained.rx_gain = 9.0;
        gained.distance_m = 6.0; // Gt Gr / d^2 = 1
        CHECK(rel_err(std::pow(rf_path_gain(gained), 2), xi * xi) < 1e-14);
    }

    TEST_CASE("composite CDF limits")
    {
        const ThzLinkParams p = baseline().thz;
        const auto g = misalignment_geometry(p);
        CHECK(hpf_cdf(0.0, g, p) == 0.0);
        CHECK(hpf_cdf(1e-300, g, p) <= 1e-15);
        CHECK(1.0 - hpf_cdf(50.0, g, p) <= 1e-9);
        CHECK(hpf_cdf(std::numeric_limits<double>::infinity(), g, p) == 1.0);
        CHECK_THROWS_AS(hpf_cdf(-1.0, g, p), DomainError);
        CHECK_THROWS_AS(hpf_pdf(0.0, g, p), DomainError);
    }

    TEST_CASE("composite CDF is nondecreasing and PDF nonnegative")
    {
        for (double sigma : {0.001, 0.01, 0.02})
        {
            ThzLinkParams p = baseline().thz;
            p.sigma_s_m = sigma;
            const auto g = misalignment_geometry(p);
            double prev = 0.0;
            for (int i = 0; i < 1000; ++i)
            {
                const double x = std::pow(10.0, -6.0 + 7.0 * i / 999.0);
                const double f = hpf_cdf(x, g, p);
                CHECK(f >= prev);
                CHECK(f <= 1.0);
                CHECK(hpf_pdf(x, g, p) >= 0.0);
                prev = f;
            }
        }
    }

    TEST_CASE("PDF is the derivative of the CDF")
    {
        for (double h_hat : {1.0, 1.7})
        {
            ThzLinkParams p = baseline().thz;
            p.h_hat_f = h_hat;
            const auto g = misalignment_geometry(p);
            for (int i = 1; i <= 20; ++i)
            {
                const double x = 0.1 * i * h_hat;
                const double h = 1e-5 * x;
                const double deriv = (hpf_cdf(x + h, g, p) - hpf_cdf(x - h, g, p)) / (2.0 * h);
                CHECK(std::fabs(deriv - hpf_pdf(x, g, p)) <= 1e-6);
            }
        }
    }

    TEST_CASE("PDF integrates to one")
    {
        for (double sigma : {0.002, 0.01})
            for (double mu : {1.0, 2.0, 3.0})
            {
                ThzLinkParams p = baseline().thz;
                p.sigma_s_m = sigma;
                p.mu = mu;
                p.alpha = 2.0;
                const auto g = misalignment_geometry(p);
                const double total = integrate([&](double x) { return hpf_pdf(x, g, p); }, 1e-12, 10.0);
                CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
            }
    }

    TEST_CASE("non-integer mu")
    {
        ThzLinkParams p = baseline().thz;
        p.mu = 2.5;
        const auto g = misalignment_geometry(p);
        CHECK_THROWS_AS(hpf_cdf(0.5, g, p), UnsupportedParameterError);
        CHECK(hpf_pdf(0.5, g, p) > 0.0);
        const double total = integrate([&](double x) { return hpf_pdf(x, g, p); }, 1e-12, 10.0);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("negligible pointing error recovers the alpha-mu CDF")
    {
        ThzLinkParams p = wide_aperture(0.5, 0.0);
        p.alpha = 2.0;
        p.mu = 2.0;
        p.h_hat_f = 1.3;
        p.sigma_s_m = 1.0;
        auto g = misalignment_geometry(p);
        p.sigma_s_m = g.w_e / std::sqrt(2.0 * 1000.0);
        g = misalignment_geometry(p);
        CHECK(g.phi == doctest::Approx(1000.0));
        CHECK(g.s0 == doctest::Approx(1.0).epsilon(1e-15));

        const double a = p.alpha, m = p.mu, h = p.h_hat_f;
        auto alpha_mu_pdf = [&](double r) {
            return a * std::pow(m, m) * std::pow(r, a * m - 1.0) / (std::pow(h, a * m) * std::tgamma(m)) *
                   std::exp(-m * std::pow(r / h, a));
        };
        for (double x : {0.2, 0.6, 1.0, 1.5, 2.5})
            CHECK(std::fabs(hpf_cdf(x, g, p) - integrate(alpha_mu_pdf, 0.0, x)) <= 1e-3);
    }

    TEST_CASE("CDF matches the generative closed form")
    {
        // F(x) = P(μ, y) + y^β Γ(μ - β, y) / Γ(μ), y = μ (x / (ĥ S0))^α, β = φ/α
        ThzLinkParams p = baseline().thz;
        p.alpha = 1.5;
        p.mu = 3.0;
        p.h_hat_f = 0.8;
        const auto g = misalignment_geometry(p);
        const double beta = g.phi / p.alpha;
        for (double x : {0.05, 0.3, 0.7, 1.2, 2.0})
        {
            const double y = p.mu * std::pow(x / (p.h_hat_f * g.s0), p.alpha);
            const double want = boost::math::gamma_p(p.mu, y) +
                                power_times_upper_gamma(beta, p.mu - beta, y) / std::tgamma(p.mu);
            CHECK(hpf_cdf(x, g, p) == doctest::Approx(want).epsilon(1e-11));
        }
    }

    TEST_CASE("parameter validation")
    {
        ThzLinkParams p = baseline().thz;
        p.humidity_percent = 101.0;
        CHECK_THROWS_AS(p.validate(), ParameterError);
        p = baseline().thz;
        p.distance_m = 0.0;
        CHECK_THROWS_AS(p.validate(), ParameterError);
        RfLinkParams rf = baseline().rf;
        rf.frequency_hz = -1.0;
        CHECK_THROWS_AS(rf.validate(), ParameterError);
        CHECK_THROWS_AS(integer_mu(0.0), UnsupportedParameterError);
        CHECK_THROWS_AS(integer_mu(2.5), UnsupportedParameterError);
        CHECK(integer_mu(3.0) == 3);
    }
}
