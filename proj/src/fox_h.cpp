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

#include "thzrf/fox_h.hpp"

#include "thzrf/errors.hpp"
#include "thzrf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace thzrf::specfun
{

namespace
{

using cplx = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tail cut-off relative to the largest integrand sample.
constexpr double kTailRatio = 1e-20;
constexpr double kMaxTruncation = 1e5;
constexpr double kPoleOffset = 2.0;

struct Contour
{
    double abscissa;
    // Distance from the contour to the nearest pole.
    double half_width;
};

// Exponential decay rate along vertical lines is π a*/2.
double decay_exponent(const FoxHParams &p)
{
    double a_star = 0.0;
    for (std::size_t j = 0; j < p.upper.size(); ++j)
        a_star += (j < p.n ? 1.0 : -1.0) * p.upper[j].scale;
    for (std::size_t j = 0; j < p.lower.size(); ++j)
        a_star += (j < p.m ? 1.0 : -1.0) * p.lower[j].scale;
    return a_star;
}

Contour select_contour(const FoxHParams &p)
{
    p.validate();
    if (decay_exponent(p) <= 0.0)
        throw ParameterError("fox_h: kernel does not decay along vertical lines (a* <= 0)");

    double left = -kInf;
    for (std::size_t j = 0; j < p.m; ++j)
        left = std::max(left, -p.lower[j].shift / p.lower[j].scale);
    double right = kInf;
    for (std::size_t j = 0; j < p.n; ++j)
        right = std::min(right, (1.0 - p.upper[j].shift) / p.upper[j].scale);

    if (std::isfinite(left) && std::isfinite(right))
    {
        if (right <= left)
            throw ParameterError("fox_h: pole groups overlap, no separating contour (left " +
                                 std::to_string(left) + " >= right " + std::to_string(right) + ")");
        return {0.5 * (left + right), 0.5 * (right - left)};
    }
    if (std::isfinite(left))
        return {left + 0.5, 0.5};
    if (std::isfinite(right))
        return {right - 0.5, 0.5};
    return {0.0, 1.0};
}

// For |log z| large the result is dominated by the pole nearest the
// contour on the side z^-s decays towards, and a contour at the midpoint
// carries |z^-s| larger than the result by exp(|log z| d). Moving the
// contour to within ~2/|log z| of that pole bounds the excess at e^2.
Contour place_contour(const FoxHParams &p, double log_z)
{
    Contour c = select_contour(p);
    const double target = kPoleOffset / std::fabs(log_z);
    if (!(target < c.half_width))
        return c;
    const bool has_left = p.m > 0;
    const bool has_right = p.n > 0;
    if (log_z < 0.0 && has_left)
        c.abscissa -= c.half_width - target;
    else if (log_z > 0.0 && has_right)
        c.abscissa += c.half_width - target;
    else
        return c;
    c.half_width = target;
    return c;
}

cplx log_kernel(const FoxHParams &p, cplx s)
{
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < p.lower.size(); ++j)
    {
        const auto &t = p.lower[j];
        if (j < p.m)
            acc += log_gamma(t.shift + t.scale * s);
        else
            acc -= log_gamma(1.0 - t.shift - t.scale * s);
    }
    for (std::size_t j = 0; j < p.upper.size(); ++j)
    {
        const auto &t = p.upper[j];
        if (j < p.n)
            acc += log_gamma(1.0 - t.shift - t.scale * s);
        else
            acc -= log_gamma(t.shift + t.scale * s);
    }
    return acc;
}

class Integrand
{
public:
    Integrand(const FoxHParams &p, double c, double log_z, double log_scale)
        : params_(p), c_(c), log_z_(log_z), log_scale_(log_scale) {}

    cplx operator()(double t) const
    {
        const cplx s(c_, t);
        return std::exp(log_kernel(params_, s) - s * log_z_ + log_scale_);
    }

    // |d/dt arg g| at t = 0, equal to |d/dc log|g|| by Cauchy-Riemann.
    double phase_rate() const
    {
        const double delta = 1e-4;
        const double up = log_kernel(params_, cplx(c_ + delta, 0.0)).real();
        const double down = log_kernel(params_, cplx(c_ - delta, 0.0)).real();
        return std::fabs((up - down) / (2.0 * delta) - log_z_);
    }

private:
    const FoxHParams &params_;
    double c_;
    double log_z_;
    double log_scale_;
};

struct Accumulator
{
    cplx sum{0.0, 0.0};
    double abs_sum = 0.0;
    double peak = 0.0;

    void add(cplx v)
    {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConvergenceError("fox_h: integrand overflow on the contour", kInf);
        sum += v;
        const double a = std::abs(v);
        abs_sum += a;
        peak = std::max(peak, a);
    }
};

FoxHResult integrate(const FoxHParams &params, double log_z, double log_scale, const FoxHOptions &opt)
{
    if (!std::isfinite(log_z) || !std::isfinite(log_scale))
        throw DomainError("fox_h: argument must be finite and positive");

    const Contour contour = place_contour(params, log_z);
    const Integrand g(params, contour.abscissa, log_z, log_scale);

    // Trapezoid error on a strip of half-width d is ~exp(-2πd/h + d·rate).
    const double d = contour.half_width;
    double h = std::min(1.0, kTwoPi * d / (4.0 * std::numbers::pi + d * g.phase_rate()));

    // Truncation: grow until both tails fall below kTailRatio of the peak.
    double peak = std::abs(g(0.0));
    double truncation = 2.0;
    for (;;)
    {
        const double tail = std::max(std::abs(g(truncation)), std::abs(g(-truncation)));
        peak = std::max(peak, tail);
        if (tail <= kTailRatio * peak)
            break;
        if (truncation > kMaxTruncation)
            throw ConvergenceError("fox_h: integrand does not decay along the contour", tail);
        truncation *= 1.5;
    }

    long half_count = static_cast<long>(std::ceil(truncation / h));
    Accumulator acc;
    for (long j = -half_count; j <= half_count; ++j)
        acc.add(g(j * h));
    cplx previous = h * acc.sum / kTwoPi;

    FoxHResult result;
    result.abscissa = contour.abscissa;
    double last_diff = kInf;
    for (int level = 1; level <= opt.max_refinements; ++level)
    {
        // Halve the step and double the truncation: old nodes are the even
        // indices of the new grid within [-2N, 2N].
        h *= 0.5;
        const long old_half = 2 * half_count;
        const long new_half = 4 * half_count;
        for (long j = -old_half + 1; j < old_half; j += 2)
            acc.add(g(j * h));
        for (long j = old_half + 1; j <= new_half; ++j)
        {
            acc.add(g(j * h));
            acc.add(g(-j * h));
        }
        half_count = new_half;

        const cplx current = h * acc.sum / kTwoPi;
        last_diff = std::abs(current - previous);
        const double roundoff_floor = 64.0 * kEps * h * acc.abs_sum / kTwoPi;
        if (last_diff <= opt.relative_tolerance * std::fabs(current.real()) || last_diff <= roundoff_floor)
        {
            result.value = current.real();
            result.imag_residual = current.imag();
            result.error_estimate = last_diff;
            result.truncation = half_count * h;
            result.step = h;
            result.refinements = level;
            return result;
        }
        previous = current;
    }
    throw ConvergenceError("fox_h: trapezoid estimates did not settle within " +
                               std::to_string(opt.max_refinements) + " refinements (last change " +
                               std::to_string(last_diff) + ")",
                           last_diff);
}

} // namespace

void FoxHParams::validate() const
{
    if (m > lower.size())
        throw ParameterError("fox_h: m exceeds the number of lower parameters");
    if (n > upper.size())
        throw ParameterError("fox_h: n exceeds the number of upper parameters");
    auto check = [](const FoxHTerm &t) {
        if (!std::isfinite(t.shift) || !std::isfinite(t.scale))
            throw ParameterError("fox_h: non-finite parameter");
        if (t.scale <= 0.0)
            throw ParameterError("fox_h: scale parameters must be > 0");
    };
    std::for_each(upper.begin(), upper.end(), check);
    std::for_each(lower.begin(), lower.end(), check);
}

double contour_abscissa(const FoxHParams &params)
{
    return select_contour(params).abscissa;
}

FoxHResult fox_h(const FoxHParams &params, double z, const FoxHOptions &options)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw DomainError("fox_h: z must be finite and > 0");
    return integrate(params, std::log(z), 0.0, options);
}

FoxHResult fox_h_scaled(const FoxHParams &params, double log_z, double log_scale, const FoxHOptions &options)
{
    return integrate(params, log_z, log_scale, options);
}

} // namespace thzrf::specfun
