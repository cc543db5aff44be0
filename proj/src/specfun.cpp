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

#include "thzrf/specfun.hpp"

#include "thzrf/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace thzrf::specfun
{

namespace
{

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxTerms = 100000;

void require_finite(double v, const char *what)
{
    if (!std::isfinite(v))
        throw DomainError(std::string(what) + ": argument is not finite");
}

bool is_nonpositive_integer(double a)
{
    return a <= 0.0 && a == std::floor(a);
}

// Legendre continued fraction for Γ(a, x), modified Lentz. Returns the scaled
// value e^x x^-a Γ(a, x). Converges for every real a when x > 0; fast once
// x >= 1 or x - a is large.
double continued_fraction_scaled(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxTerms; ++i)
    {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps)
            return h;
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge", std::fabs(h));
}

// Γ(a, x) for a >= 1, x < a + 1: Γ(a) (1 - P(a, x)) with the lower series.
double gamma_by_lower_series(double a, double x)
{
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < kMaxTerms; ++n)
    {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps)
        {
            const double p = sum * std::exp(a * std::log(x) - x - std::lgamma(a));
            return std::exp(std::lgamma(a)) * (1.0 - p);
        }
    }
    throw ConvergenceError("upper_incomplete_gamma: lower series did not converge", term);
}

// Γ(a, x) for 0 <= a < 1, 0 < x < 2 without the Γ(a) - γ(a, x) cancellation:
//   Γ(a, x) = (Γ(1+a) - 1)/a - (x^a - 1)/a - x^a Σ_{n>=1} (-x)^n / (n! (a+n)).
// a = 0 gives E1(x) = -γ - ln x - Σ (-x)^n / (n n!).
double gamma_small_order(double a, double x)
{
    const double lx = std::log(x);
    double head;
    if (a == 0.0)
        head = -std::numbers::egamma - lx;
    else
        head = std::expm1(std::lgamma(1.0 + a)) / a - std::expm1(a * lx) / a;

    double sum = 0.0;
    double power = 1.0; // (-x)^n / n!
    for (int n = 1; n < kMaxTerms; ++n)
    {
        power *= -x / n;
        const double term = power / (a + n);
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum))
            break;
    }
    const double xa = (a == 0.0) ? 1.0 : std::exp(a * lx);
    return head - xa * sum;
}

// Scaled Γ for a <= 0, x > 0.
double scaled_nonpositive_order(double a, double x)
{
    if (x >= 1.0)
        return continued_fraction_scaled(a, x);

    // Downward recurrence U(s) = (x U(s+1) - 1) / s from a positive order.
    int steps;
    double start;
    if (is_nonpositive_integer(a))
    {
        steps = static_cast<int>(-a);
        start = std::exp(x) * gamma_small_order(0.0, x);
    }
    else
    {
        steps = static_cast<int>(std::ceil(-a)) + 1;
        const double lx = std::log(x);
        double top = a + steps;
        if (-top * lx < 700.0)
        {
            start = std::exp(x - top * lx) * gamma_by_lower_series(top, x);
        }
        else
        {
            // x^-top overflows; begin one order lower, inside (0, 1).
            --steps;
            top -= 1.0;
            if (-top * lx >= 700.0)
                return std::exp(x) * (std::exp(-a * lx) * std::tgamma(a) - 1.0 / a);
            start = std::exp(x - top * lx) * gamma_small_order(top, x);
        }
    }
    double u = start;
    for (int j = steps - 1; j >= 0; --j)
        u = (x * u - 1.0) / (a + j);
    return u;
}

double gamma_positive_order(double a, double x)
{
    if (x >= a + 1.0)
        return std::exp(a * std::log(x) - x) * continued_fraction_scaled(a, x);
    if (a < 1.0)
        return gamma_small_order(a, x);
    return gamma_by_lower_series(a, x);
}

} // namespace

double erf(double x)
{
    require_finite(x, "erf");
    return std::erf(x);
}

double erfc(double x)
{
    require_finite(x, "erfc");
    return std::erfc(x);
}

double gaussian_q(double x)
{
    require_finite(x, "gaussian_q");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double upper_incomplete_gamma(double a, double x)
{
    require_finite(a, "upper_incomplete_gamma");
    require_finite(x, "upper_incomplete_gamma");
    if (x < 0.0)
        throw DomainError("upper_incomplete_gamma: x must be >= 0");
    if (x == 0.0)
    {
        if (a <= 0.0)
            throw DivergenceError("upper_incomplete_gamma: integral diverges at x = 0 for a <= 0");
        return std::tgamma(a);
    }
    if (a > 0.0)
        return gamma_positive_order(a, x);
    const double u = scaled_nonpositive_order(a, x);
    return std::exp(a * std::log(x) - x + std::log(u));
}

double upper_incomplete_gamma_scaled(double a, double x)
{
    require_finite(a, "upper_incomplete_gamma_scaled");
    require_finite(x, "upper_incomplete_gamma_scaled");
    if (x < 0.0)
        throw DomainError("upper_incomplete_gamma_scaled: x must be >= 0");
    if (x == 0.0)
    {
        if (a < 0.0)
            return -1.0 / a;
        if (a == 0.0)
            throw DivergenceError("upper_incomplete_gamma_scaled: Γ(0, 0) diverges");
        return std::numeric_limits<double>::infinity();
    }
    if (a <= 0.0)
        return scaled_nonpositive_order(a, x);
    if (x >= a + 1.0)
        return continued_fraction_scaled(a, x);
    return std::exp(x - a * std::log(x)) * gamma_positive_order(a, x);
}

} // namespace thzrf::specfun
