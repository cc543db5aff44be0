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
#include "thzrf/mc.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace thzrf;
using namespace thzrf::mc;
using thzrf::testing::baseline;
using thzrf::testing::scenario_with;

namespace
{

template <class Draw>
std::vector<double> draws(std::size_t n, std::uint64_t seed, Draw draw)
{
    Rng rng = make_stream(RngSeed{seed}, 0);
    std::vector<double> out(n);
    for (auto &v : out)
        v = draw(rng);
    return out;
}

bool within(const Estimate &e, double truth, double k = 3.0)
{
    return std::fabs(e.value - truth) <= k * e.std_error;
}

} // namespace

TEST_SUITE("mc")
{
    TEST_CASE("alpha-mu reduces to Rayleigh")
    {
        auto p = baseline().thz;
        p.alpha = 2.0;
        p.mu = 1.0;
        p.h_hat_f = 1.4;
        auto x = draws(1000000, 1, [&](Rng &r) { return sample_alpha_mu(p, r); });
        const double d = ks_statistic(x, [&](double r) { return -std::expm1(-r * r / (1.4 * 1.4)); });
        CHECK(d < ks_critical_1pct(x.size()));
    }

    TEST_CASE("alpha-mu moment")
    {
        for (double alpha : {1.0, 2.0, 3.5})
        {
            auto p = baseline().thz;
            p.alpha = alpha;
            p.mu = 3.0;
            p.h_hat_f = 0.7;
            const auto x = draws(200000, 2, [&](Rng &r) { return std::pow(sample_alpha_mu(p, r), alpha); });
            double mean = 0.0, sq = 0.0;
            for (double v : x)
                mean += v;
            mean /= x.size();
            for (double v : x)
                sq += (v - mean) * (v - mean);
            const double se = std::sqrt(sq / (x.size() - 1.0) / x.size());
            CHECK(std::fabs(mean - std::pow(0.7, alpha)) <= 3.0 * se);
        }
    }

    TEST_CASE("pointing loss law")
    {
        const auto s = baseline();
        const auto g = channel::misalignment_geometry(s.thz);
        CHECK(pointing_loss(g, 0.0) == g.s0);
        auto x = draws(1000000, 3, [&](Rng &r) { return sample_pointing_loss(g, s.thz.sigma_s_m, r); });
        CHECK(*std::max_element(x.begin(), x.end()) <= g.s0);
        const double d = ks_statistic(x, [&](double y) { return y >= g.s0 ? 1.0 : std::pow(y / g.s0, g.phi); });
        CHECK(d < ks_critical_1pct(x.size()));

        const auto tight = draws(1000, 4, [&](Rng &r) { return sample_pointing_loss(g, 1e-9, r); });
        for (double v : tight)
            CHECK(std::fabs(v - g.s0) <= 1e-6);
    }

    TEST_CASE("composite samples match the analytic CDF")
    {
        for (const char *h_hat : {"1", "1.6"})
        {
            const auto s = scenario_with({{"h_hat_f", h_hat}, {"alpha", "1.5"}});
            const auto g = channel::misalignment_geometry(s.thz);
            auto x = draws(400000, 5, [&](Rng &r) { return sample_hpf(s.thz, g, r); });
            CHECK(*std::min_element(x.begin(), x.end()) > 0.0);
            const double d = ks_statistic(x, [&](double v) { return channel::hpf_cdf(v, g, s.thz); });
            CHECK(d < ks_critical_1pct(x.size()));
        }
    }

    TEST_CASE("CDF at the sample median")
    {
        const auto s = baseline();
        const auto g = channel::misalignment_geometry(s.thz);
        auto x = draws(1000000, 6, [&](Rng &r) { return sample_hpf(s.thz, g, r); });
        std::nth_element(x.begin(), x.begin() + x.size() / 2, x.end());
        const double median = x[x.size() / 2];
        CHECK(std::fabs(channel::hpf_cdf(median, g, s.thz) - 0.5) <= 3.0 * 0.5 / std::sqrt(1e6));
    }

    TEST_CASE("deterministic replay")
    {
        const auto s = baseline();
        const auto g = channel::misalignment_geometry(s.thz);
        const auto a = draws(100, 42, [&](Rng &r) { return sample_hpf(s.thz, g, r); });
        const auto b = draws(100, 42, [&](Rng &r) { return sample_hpf(s.thz, g, r); });
        CHECK(a == b);
        const auto c = draws(100, 43, [&](Rng &r) { return sample_hpf(s.thz, g, r); });
        CHECK(a != c);
    }

    TEST_CASE("parallel and serial estimators are bit-identical")
    {
        const auto s = baseline();
        const auto m = perf::parse_modulation("mqam:16");
        for (std::uint64_t n : {1ULL, 63ULL, 1000ULL, 123457ULL})
        {
            const auto p = simulate_op(s, n, RngSeed{9});
            const auto q = reference::simulate_op(s, n, RngSeed{9});
            CHECK(p.value == q.value);
            CHECK(p.std_error == q.std_error);
            CHECK(p.n == n);
            const auto ps = simulate_ser(s, m, n, RngSeed{9});
            const auto qs = reference::simulate_ser(s, m, n, RngSeed{9});
            CHECK(ps.value == qs.value);
            CHECK(ps.std_error == qs.std_error);
        }
    }

    TEST_CASE("OP estimator")
    {
        const auto s = baseline();
        CHECK(within(simulate_op(s, 1000000, RngSeed{1}), perf::outage_probability(s)));

        auto zero = s;
        zero.gamma_th = 0.0;
        CHECK(simulate_op(zero, 10000, RngSeed{1}).value == 0.0);

        auto dead = s;
        dead.er_over_no2 = 1e-30;
        CHECK(simulate_op(dead, 10000, RngSeed{1}).value == 1.0);
    }

    TEST_CASE("OP estimator with a transparent second hop")
    {
        auto s = baseline();
        s.er_over_no2 = 1e30;
        CHECK(within(simulate_op(s, 400000, RngSeed{2}), perf::snr_cdf_hop1(s.gamma_th, s)));
    }

    TEST_CASE("SER estimator")
    {
        const auto s = baseline();
        for (const char *name : {"mqam:4", "mqam:16"})
        {
            const auto m = perf::parse_modulation(name);
            CHECK(within(simulate_ser(s, m, 1000000, RngSeed{3}), perf::average_ser_closed_form(s, m)));
        }

        auto silent = s;
        silent.es_over_no1 = 1e-30;
        const auto bpsk = perf::parse_modulation("bpsk");
        CHECK(simulate_ser(silent, bpsk, 10000, RngSeed{4}).value == doctest::Approx(0.5).epsilon(1e-9));

        perf::Modulation huge = bpsk;
        huge.b = 1e12;
        CHECK(simulate_ser(s, huge, 10000, RngSeed{4}).value < 1e-6);
    }

    TEST_CASE("standard error scales as one over root n")
    {
        const auto s = baseline();
        const auto small = simulate_op(s, 10000, RngSeed{8});
        const auto large = simulate_op(s, 1000000, RngSeed{8});
        const double ratio = small.std_error / large.std_error;
        CHECK(ratio == doctest::Approx(10.0).epsilon(0.2));
    }

    TEST_CASE("SNR draws follow the closed-form CDF on a grid")
    {
        const auto s = baseline();
        const auto lb = perf::link_budget(s);
        const std::size_t n = 1000000;
        auto x = draws(n, 12, [&](Rng &r) { return sample_e2e_snr(s, lb, r); });
        std::sort(x.begin(), x.end());
        for (int i = 0; i < 30; ++i)
        {
            const double t = std::pow(10.0, -1.5 + 3.0 * i / 29.0);
            const double emp = static_cast<double>(std::upper_bound(x.begin(), x.end(), t) - x.begin()) / n;
            const double f = perf::e2e_snr_cdf(t, s);
            const double se = std::sqrt(std::max(f * (1.0 - f), 1e-12) / n);
            CHECK(std::fabs(emp - f) <= 3.0 * se);
        }
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(simulate_op(baseline(), 0, RngSeed{1}), ParameterError);
        auto s = baseline();
        s.thz.mu = 2.5;
        Rng rng = make_stream(RngSeed{1}, 0);
        CHECK_THROWS_AS(sample_alpha_mu(s.thz, rng), UnsupportedParameterError);
    }
}
