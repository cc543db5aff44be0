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

#include "thzrf/mc.hpp"

#include "thzrf/errors.hpp"
#include "thzrf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace thzrf::mc
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Running sum and sum of squared deviations (Chan et al. merge).
struct Moments
{
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v)
    {
        ++n;
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0)
            return;
        if (n == 0)
        {
            *this = o;
            return;
        }
        const double total = static_cast<double>(n + o.n);
        const double delta = o.mean - mean;
        mean += delta * static_cast<double>(o.n) / total;
        m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
        n += o.n;
    }

    Estimate estimate() const
    {
        Estimate e;
        e.n = n;
        e.value = mean;
        e.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
        return e;
    }
};

std::uint64_t stream_share(std::uint64_t n, std::uint64_t stream)
{
    return n / kStreams + (stream < n % kStreams ? 1 : 0);
}

template <class Trial>
Moments run_stream(RngSeed seed, std::uint64_t stream, std::uint64_t count, const Trial &trial)
{
    Rng rng = make_stream(seed, stream);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i)
        m.add(trial(rng));
    return m;
}

template <class Trial>
Estimate run_serial(std::uint64_t n, RngSeed seed, const Trial &trial)
{
    Moments total;
    for (std::uint64_t s = 0; s < kStreams; ++s)
        total.merge(run_stream(seed, s, stream_share(n, s), trial));
    return total.estimate();
}

template <class Trial>
Estimate run_parallel(std::uint64_t n, RngSeed seed, const Trial &trial)
{
    std::vector<Moments> partial(kStreams);
    const long streams = static_cast<long>(kStreams);
#pragma omp parallel for schedule(static)
    for (long s = 0; s < streams; ++s)
    {
        const auto idx = static_cast<std::uint64_t>(s);
        partial[idx] = run_stream(seed, idx, stream_share(n, idx), trial);
    }
    Moments total;
    for (const auto &m : partial)
        total.merge(m);
    return total.estimate();
}

void require_trials(std::uint64_t n)
{
    if (n == 0)
        throw ParameterError("Monte Carlo trial count must be > 0");
}

struct OpTrial
{
    const perf::Scenario &scenario;
    perf::LinkBudget budget;

    double operator()(Rng &rng) const
    {
        return sample_e2e_snr(scenario, budget, rng) <= scenario.gamma_th ? 1.0 : 0.0;
    }
};

struct SerTrial
{
    const perf::Scenario &scenario;
    perf::LinkBudget budget;
    perf::Modulation mod;

    double operator()(Rng &rng) const
    {
        const double g = sample_e2e_snr(scenario, budget, rng);
        return mod.a * specfun::gaussian_q(std::sqrt(2.0 * mod.b * g));
    }
};

} // namespace

Rng make_stream(RngSeed seed, std::uint64_t stream)
{
    std::seed_seq seq{splitmix64(seed.value), splitmix64(seed.value ^ splitmix64(stream + 1)), stream};
    return Rng(seq);
}

double sample_alpha_mu(const channel::ThzLinkParams &params, Rng &rng)
{
    const int mu = channel::integer_mu(params.mu);
    if (!(params.alpha > 0.0) || !(params.h_hat_f > 0.0))
        throw ParameterError("sample_alpha_mu: alpha and h_hat_f must be > 0");
    std::exponential_distribution<double> unit_exp(1.0);
    double z = 0.0;
    for (int i = 0; i < mu; ++i)
        z += unit_exp(rng);
    return params.h_hat_f * std::pow(z / mu, 1.0 / params.alpha);
}

double pointing_loss(const channel::MisalignmentGeometry &geom, double radial_error)
{
    return geom.s0 * std::exp(-radial_error * radial_error / (geom.w_e * geom.w_e));
}

double sample_pointing_loss(const channel::MisalignmentGeometry &geom, double sigma_s, Rng &rng)
{
    std::normal_distribution<double> jitter(0.0, sigma_s);
    const double x = jitter(rng);
    const double y = jitter(rng);
    return pointing_loss(geom, std::hypot(x, y));
}

double sample_hpf(const channel::ThzLinkParams &params, const channel::MisalignmentGeometry &geom, Rng &rng)
{
    const double fading = sample_alpha_mu(params, rng);
    return fading * sample_pointing_loss(geom, params.sigma_s_m, rng);
}

double sample_rayleigh_power(Rng &rng)
{
    std::exponential_distribution<double> unit_exp(1.0);
    return unit_exp(rng);
}

double sample_e2e_snr(const perf::Scenario &scenario, const perf::LinkBudget &budget, Rng &rng)
{
    const double hpf = sample_hpf(scenario.thz, budget.geom, rng);
    const double gamma1 = budget.gamma1_scale * hpf * hpf;
    const double gamma2 = budget.gamma2_mean * sample_rayleigh_power(rng);
    return std::min(gamma1, gamma2);
}

Estimate simulate_op(const perf::Scenario &scenario, std::uint64_t n, RngSeed seed)
{
    require_trials(n);
    return run_parallel(n, seed, OpTrial{scenario, perf::link_budget(scenario)});
}

Estimate simulate_ser(const perf::Scenario &scenario, const perf::Modulation &mod, std::uint64_t n, RngSeed seed)
{
    require_trials(n);
    return run_parallel(n, seed, SerTrial{scenario, perf::link_budget(scenario), mod});
}

namespace reference
{

Estimate simulate_op(const perf::Scenario &scenario, std::uint64_t n, RngSeed seed)
{
    require_trials(n);
    return run_serial(n, seed, OpTrial{scenario, perf::link_budget(scenario)});
}

Estimate simulate_ser(const perf::Scenario &scenario, const perf::Modulation &mod, std::uint64_t n, RngSeed seed)
{
    require_trials(n);
    return run_serial(n, seed, SerTrial{scenario, perf::link_budget(scenario), mod});
}

} // namespace reference

double ks_statistic(std::span<double> samples, const std::function<double(double)> &cdf)
{
    if (samples.empty())
        throw ParameterError("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_critical_1pct(std::size_t n)
{
    return 1.62762 / std::sqrt(static_cast<double>(n));
}

} // namespace thzrf::mc
