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

#ifndef THZRF_FOX_H_HPP
#define THZRF_FOX_H_HPP

#include <cstddef>
#include <vector>

namespace thzrf::specfun
{

/// One (a_j, A_j) or (b_j, B_j) pair of an H-function parameter list.
struct FoxHTerm
{
    double shift;
    double scale;
};

/// Parameters of H^{m,n}_{p,q}[z | (a_j, A_j)_{1..p} ; (b_j, B_j)_{1..q}].
///
/// The Mellin-Barnes kernel is
///
///     χ(s) = Π_{j<=m} Γ(b_j + B_j s) Π_{j<=n} Γ(1 - a_j - A_j s)
///          / (Π_{j>m} Γ(1 - b_j - B_j s) Π_{j>n} Γ(a_j + A_j s))
///
/// and H(z) = (1 / 2πi) ∫ χ(s) z^(-s) ds along Re(s) = c.
struct FoxHParams
{
    std::vector<FoxHTerm> upper;
    std::vector<FoxHTerm> lower;
    std::size_t m = 0;
    std::size_t n = 0;

    /// Throws ParameterError on non-positive scales, m > q, n > p or
    /// non-finite entries.
    void validate() const;
};

struct FoxHOptions
{
    double relative_tolerance = 1e-9;
    int max_refinements = 6;
};

struct FoxHResult
{
    double value = 0.0;
    /// Imaginary part left over by the numerical integration.
    double imag_residual = 0.0;
    /// |I_k - I_(k-1)| of the last two trapezoid estimates.
    double error_estimate = 0.0;
    double abscissa = 0.0;
    double truncation = 0.0;
    double step = 0.0;
    int refinements = 0;
};

/// Real part of the vertical contour abscissa separating the two pole groups.
/// Throws ParameterError when the groups overlap or the kernel does not decay.
double contour_abscissa(const FoxHParams &params);

/// Fox H-function for real z > 0 by trapezoidal quadrature along Re(s) = c.
FoxHResult fox_h(const FoxHParams &params, double z, const FoxHOptions &options = {});

/// exp(log_scale) * H(exp(log_z)) with the scale folded into the integrand,
/// for arguments or prefactors outside the double range.
FoxHResult fox_h_scaled(const FoxHParams &params, double log_z, double log_scale,
                        const FoxHOptions &options = {});

} // namespace thzrf::specfun

#endif
