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
#include "thzrf/specfun.hpp"

#include <cmath>
#include <numbers>

namespace thzrf::specfun
{

namespace
{

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// log sin(πz) without overflow for large |Im z|.
//   sin(πz) = e^(-iπz) (1 - e^(2πiz)) / (-2i)
cplx log_sin_pi(cplx z)
{
    if (z.imag() < 0.0)
        return std::conj(log_sin_pi(std::conj(z)));
    const cplx i(0.0, 1.0);
    const cplx w = std::exp(2.0 * kPi * i * z);
    return -i * kPi * z + std::log(1.0 - w) - cplx(std::log(2.0), -0.5 * kPi);
}

// Stirling series, |w| >= 15 and Re w > 0.
cplx stirling(cplx w)
{
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    const cplx tail =
        inv * (1.0 / 12.0 +
               inv2 * (-1.0 / 360.0 +
                       inv2 * (1.0 / 1260.0 +
                               inv2 * (-1.0 / 1680.0 +
                                       inv2 * (1.0 / 1188.0 +
                                               inv2 * (-691.0 / 360360.0 +
                                                       inv2 * (1.0 / 156.0 + inv2 * (-3617.0 / 122400.0))))))));
    return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + tail;
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: argument is not finite");

    if (z.real() < 0.5)
    {
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            throw DomainError("log_gamma: pole at a non-positive integer");
        return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }

    // Shift up to Re >= 15 via Γ(z) = Γ(z + N) / (z (z+1) ... (z+N-1)).
    cplx w = z;
    cplx product(1.0, 0.0);
    cplx log_product(0.0, 0.0);
    while (w.real() < 15.0)
    {
        product *= w;
        w += 1.0;
        if (std::abs(product) > 1e250)
        {
            log_product += std::log(product);
            product = 1.0;
        }
    }
    log_product += std::log(product);
    return stirling(w) - log_product;
}

} // namespace thzrf::specfun
