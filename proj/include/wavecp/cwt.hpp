// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <span>
#include <vector>

namespace wavecp {

enum class MotherWavelet { haar_analytic, morlet_real, mexican_hat };

/// A mother wavelet sampled on a uniform grid t_i = t0 + i dt.
struct SampledWavelet {
    std::vector<double> samples;
    double dt = 0.0;
    double t0 = 0.0;
    MotherWavelet family = MotherWavelet::mexican_hat;

    /// Riemann-sum integral and energy over the grid.
    double integral() const;
    double energy() const;
};

/// Build a sampled mother wavelet with n_samples points.
/// haar_analytic spans [0,1); morlet_real (center frequency omega0) and
/// mexican_hat span [-8, 8].
SampledWavelet make_wavelet(MotherWavelet family, std::size_t n_samples,
                            double omega0 = 6.0);

struct AdmissibilityReport {
    double zero_integral_residual = 0.0;  ///< |sum psi_i dt|
    double energy_residual = 0.0;         ///< |sum psi_i^2 dt - 1|
    double c_psi = 0.0;                   ///< quadrature estimate of the admissibility constant
    bool c_psi_finite_positive = false;
};

/// Numerical admissibility checks from the discrete Fourier magnitude of the
/// samples. Throws DegenerateWavelet when the sampled energy is ~0.
AdmissibilityReport check_admissibility(const SampledWavelet& w);

struct Scalogram {
    std::vector<std::vector<double>> coefficients;  ///< n_scales x n_times
    std::vector<double> scales;
    std::size_t n_times = 0;
};

/// Dyadic scale grid with `voices` scales per octave covering [s_min, s_max].
std::vector<double> dyadic_scales(double s_min, double s_max, int voices = 4);

/// Discretized CWT by direct correlation of x with 1/sqrt(s) psi((t-tau)/s),
/// zero extension at the boundaries. Scales must be positive and ascending.
Scalogram cwt_transform(std::span<const double> x, std::span<const double> scales,
                        const SampledWavelet& w);

}  // namespace wavecp
