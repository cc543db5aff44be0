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

#ifndef THZRF_SPECFUN_HPP
#define THZRF_SPECFUN_HPP

#include <complex>

namespace thzrf::specfun
{

double erf(double x);
double erfc(double x);

/// Gaussian tail probability Q(x) = P[N(0,1) > x] = erfc(x / sqrt(2)) / 2.
double gaussian_q(double x);

/// Upper incomplete gamma function Γ(a, x) = ∫_x^∞ t^(a-1) e^(-t) dt for any real a.
///
/// Requires x >= 0; at x = 0 only a > 0 is admissible. Negative a is handled by
/// the continued fraction (x >= 1) or by downward recurrence from a positive
/// order (x < 1). The result may overflow to +inf for very negative a and tiny x.
double upper_incomplete_gamma(double a, double x);

/// Scaled upper incomplete gamma U(a, x) = e^x x^(-a) Γ(a, x), x > 0.
///
/// U stays O(1) for a <= 0 whatever the magnitude of a, which is what makes
/// x^p Γ(a, x) products computable when p and -a are in the hundreds.
/// U(a, 0) = -1/a is returned for a < 0.
double upper_incomplete_gamma_scaled(double a, double x);

/// log Γ(z) on the principal sheet used by the contour integrator. Only
/// exp(log_gamma(z)) is meaningful; the imaginary part may differ from the
/// canonical branch by a multiple of 2π.
std::complex<double> log_gamma(std::complex<double> z);

} // namespace thzrf::specfun

#endif
