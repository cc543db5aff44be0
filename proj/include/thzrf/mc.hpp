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
#ifndef THZRF_MC_HPP
#define THZRF_MC_HPP

#include "thzrf/channel.hpp"
#include "thzrf/perf.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>

namespace thzrf::mc
{

using Rng = std::mt19937_64;

struct RngSeed
{
    std::uint64_t value = 0;
};

/// Generator for sub-stream `stream` of `seed`. Distinct (seed, stream)
/// pairs give decorrelated generators; equal pairs give equal streams.
Rng make_stream(RngSeed seed, std::uint64_t stream);

/// Monte Carlo mean with its standard error (sample std / sqrt(n)).
struct Estimate
{
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

/// Number of independent sub-streams a run is split into. Fixed, so the
/// result does not depend on how many threads execute it.
inline constexpr std::uint64_t kStreams = 64;

// Samplers. Each takes the generator of the calling strand.

/// α-μ envelope R = h_hat_f (Z / μ)^(1/α), Z ~ Gamma(μ, 1) as a sum of μ unit exponentials.
double sample_alpha_mu(const channel::ThzLinkParams &params, Rng &rng);

/// Pointing loss h_p = S0 exp(-r^2 / w_e^2), r the radial displacement of two
/// independent N(0, σ_s^2) axis errors. Gives P[h_p <= y] = (y / S0)^φ.
double sample_pointing_loss(const channel::MisalignmentGeometry &geom, double sigma_s, Rng &rng);

/// Pointing loss for a given radial displacement.
double pointing_loss(const channel::MisalignmentGeometry &geom, double radial_error);

/// Composite |h_pf| = R · h_p.
double sample_hpf(const channel::ThzLinkParams &params, const channel::MisalignmentGeometry &geom, Rng &rng);

/// Rayleigh power gain |h_f|^2 ~ Exp(1).
double sample_rayleigh_power(Rng &rng);

/// Draw of the end-to-end SNR min(γ1, γ2).
double sample_e2e_snr(const perf::Scenario &scenario, const perf::LinkBudget &budget, Rng &rng);

/// Empirical P[min(γ1, γ2) <= γ_th] over n trials (OpenMP across sub-streams).
Estimate simulate_op(const perf::Scenario &scenario, std::uint64_t n, RngSeed seed);

/// Mean of a Q(sqrt(2 b γ_e)) over n channel draws (OpenMP across sub-streams).
Estimate simulate_ser(const perf::Scenario &scenario, const perf::Modulation &mod, std::uint64_t n, RngSeed seed);

namespace reference
{
// Single-threaded versions running the same sub-streams in order; results
// are bit-identical to the parallel ones.
Estimate simulate_op(const perf::Scenario &scenario, std::uint64_t n, RngSeed seed);
Estimate simulate_ser(const perf::Scenario &scenario, const perf::Modulation &mod, std::uint64_t n, RngSeed seed);
} // namespace reference

/// Kolmogorov-Smirnov distance sup |F_n - F| between samples and a CDF.
/// Sorts `samples` in place.
double ks_statistic(std::span<double> samples, const std::function<double(double)> &cdf);

/// Asymptotic one-sample KS critical value at the 1% level, 1.6276 / sqrt(n).
double ks_critical_1pct(std::size_t n);

} // namespace thzrf::mc

#endif
