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

#include "thzrf/errors.hpp"
#include "thzrf/fox_h.hpp"
#include "thzrf/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace thzrf;
using namespace thzrf::specfun;

namespace
{

FoxHParams incomplete_gamma_kernel(double a)
{
    // H^{2,0}_{1,2}[z | (1,1) ; (a,1), (0,1)] = Γ(a, z)
    return FoxHParams{{{1.0, 1.0}}, {{a, 1.0}, {0.0, 1.0}}, 2, 0};
}

} // namespace

TEST_SUITE("fox_h")
{
    TEST_CASE("exponential reduction")
    {
        const FoxHParams p{{}, {{0.0, 1.0}}, 1, 0};
        const auto r = fox_h(p, 0.5);
        CHECK(r.value == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
        CHECK(std::fabs(r.imag_residual) <= 1e-8 * std::fabs(r.value));
    }

    TEST_CASE("non-unit scale")
    {
        // H^{1,0}_{0,1}[z | ; (0, 1/2)] = 2 exp(-z^2)
        const FoxHParams p{{}, {{0.0, 0.5}}, 1, 0};
        for (double z : {0.2, 0.9, 1.7})
            CHECK(fox_h(p, z).value == doctest::Approx(2.0 * std::exp(-z * z)).epsilon(1e-9));
    }

    TEST_CASE("two-sided contour")
    {
        // H^{1,1}_{1,1}[z | (1-ρ,1) ; (0,1)] = Γ(ρ) (1+z)^-ρ
        for (double rho : {0.5, 1.0, 2.75})
        {
            const FoxHParams p{{{1.0 - rho, 1.0}}, {{0.0, 1.0}}, 1, 1};
            const double c = contour_abscissa(p);
            CHECK(c > 0.0);
            CHECK(c < rho);
            for (double z : {0.01, 0.7, 3.0, 40.0})
            {
                const double want = std::tgamma(rho) * std::pow(1.0 + z, -rho);
                CHECK(fox_h(p, z).value == doctest::Approx(want).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("incomplete gamma reduction at a = 0.75, z = 0.4")
    {
        const auto r = fox_h(incomplete_gamma_kernel(0.75), 0.4);
        CHECK(std::fabs(r.value - 0.65644372159126063359) <= 1e-9 * 0.6564);
    }

    TEST_CASE("Mellin consistency with the incomplete gamma")
    {
        for (double a : {-0.75, 0.25, 0.75, 1.5})
            for (double lz = -3.0; lz <= 1.0; lz += 0.25)
            {
                const double z = std::pow(10.0, lz);
                const auto r = fox_h(incomplete_gamma_kernel(a), z);
                const double want = upper_incomplete_gamma(a, z);
                CHECK(std::fabs(r.value - want) <= 1e-8 * std::fabs(want));
                CHECK(std::fabs(r.imag_residual) <= 1e-8 * std::fabs(r.value));
            }
    }

    TEST_CASE("scaled entry point matches plain call")
    {
        const auto p = incomplete_gamma_kernel(0.25);
        const double z = 2.5;
        const auto plain = fox_h(p, z);
        const auto scaled = fox_h_scaled(p, std::log(z), std::log(3.0));
        CHECK(scaled.value == doctest::Approx(3.0 * plain.value).epsilon(1e-12));
    }

    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS(fox_h(FoxHParams{{}, {{0.0, -1.0}}, 1, 0}, 1.0), ParameterError);
        CHECK_THROWS_AS(fox_h(FoxHParams{{}, {{0.0, 1.0}}, 2, 0}, 1.0), ParameterError);
        CHECK_THROWS_AS(fox_h(FoxHParams{{}, {{0.0, 1.0}}, 1, 1}, 1.0), ParameterError);
        // Overlapping pole groups: left pole -2, right pole -3.
        CHECK_THROWS_AS(fox_h(FoxHParams{{{4.0, 1.0}}, {{2.0, 1.0}}, 1, 1}, 1.0), ParameterError);
        // No decay along vertical lines.
        CHECK_THROWS_AS(fox_h(FoxHParams{{}, {{0.0, 1.0}, {0.0, 1.0}}, 1, 0}, 1.0), ParameterError);
        CHECK_THROWS_AS(fox_h(FoxHParams{{}, {{0.0, 1.0}}, 1, 0}, -1.0), DomainError);
    }

    TEST_CASE("non-convergence reports the achieved error")
    {
        FoxHOptions opts;
        opts.relative_tolerance = 1e-300;
        opts.max_refinements = 1;
        try
        {
            fox_h(incomplete_gamma_kernel(0.25), 1e-3, opts);
            FAIL("expected ConvergenceError");
        }
        catch (const ConvergenceError &e)
        {
            CHECK(e.achieved_error() >= 0.0);
        }
    }
}
