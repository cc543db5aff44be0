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
#ifndef THZRF_CHANNEL_HPP
#define THZRF_CHANNEL_HPP

namespace thzrf::channel
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Physical parameters of the THz source-relay hop. Gains are linear.
struct ThzLinkParams
{
    double frequency_hz;
    double distance_m;
    double tx_gain;
    double rx_gain;
    double temperature_k;
    double humidity_percent;
    double pressure_pa;
    /// α-μ fading: nonlinearity α > 0, clustering μ >= 1 (integer for the CDF).
    double alpha;
    double mu;
    /// α-root mean of the fading envelope, E[R^α] = h_hat_f^α.
    double h_hat_f;
    /// Per-axis standard deviation of the Gaussian pointing jitter.
    double sigma_s_m;
    double aperture_radius_m;
    double beam_footprint_m;

    /// Throws ParameterError if any invariant is violated.
    void validate() const;
};

/// Derived pointing-error geometry of the THz receiver.
struct MisalignmentGeometry
{
    double zeta;
    /// Fraction of power collected under perfect alignment, erf(zeta)^2.
    double s0;
    /// Equivalent beam radius at the receiver.
    double w_e;
    /// Jitter ratio w_e^2 / (2 sigma_s^2).
    double phi;
};

/// R-D hop parameters. Gains are linear.
struct RfLinkParams
{
    double frequency_hz;
    double tx_gain;
    double rx_gain;
    double distance_m;
    double path_loss_exponent;

    void validate() const;
};

/// Molecular absorption coefficient together with the fit-validity flag.
struct Absorption
{
    double kappa_per_m;
    /// false when the carrier is outside 275-400 GHz, where the fit is not validated.
    bool in_band;
};

/// Buck (1981) saturation vapour pressure over water in Pa, 250 K <= T <= 330 K.
/// Pressure is accepted for interface symmetry; the enhancement factor is not applied.
double saturated_water_vapor_pressure(double temperature_k, double pressure_pa);

/// Simplified 275-400 GHz absorption model: two water-vapour lines plus a
/// cubic background in frequency.
Absorption molecular_absorption(double frequency_hz, double temperature_k, double humidity_percent,
                                double pressure_pa);

/// Deterministic amplitude gain h_l = c sqrt(Gt Gr) / (4π f d) exp(-κ d / 2).
double thz_path_gain(const ThzLinkParams &params);

MisalignmentGeometry misalignment_geometry(const ThzLinkParams &params);

/// Density of the composite fading-times-pointing-loss amplitude |h_pf|.
/// Accepts non-integer mu.
double hpf_pdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params);

/// CDF of |h_pf|; requires integer mu.
double hpf_cdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params);

/// 1 - hpf_cdf, evaluated directly (no cancellation in the upper tail).
double hpf_ccdf(double x, const MisalignmentGeometry &geom, const ThzLinkParams &params);

/// Amplitude gain h_g = xi d^(-eta/2) with xi = c sqrt(Gt Gr) / (4π f).
double rf_path_gain(const RfLinkParams &params);

/// Throws UnsupportedParameterError unless mu is a positive integer.
int integer_mu(double mu);

/// x^p Γ(a, x) for x >= 0, p >= 0, computed through the scaled incomplete
/// gamma so huge and tiny factors never meet. Needs p + a > 0 when x = 0.
double power_times_upper_gamma(double p, double a, double x);

} // namespace thzrf::channel

#endif
