// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "wavecp/errors.hpp"

namespace wavecp {

double SampledWavelet::integral() const {
    double s = 0.0;
    for (double v : samples) s += v;
    return s * dt;
}

double SampledWavelet::energy() const {
    double s = 0.0;
    for (double v : samples) s += v * v;
    return s * dt;
}

SampledWavelet make_wavelet(MotherWavelet family, std::size_t n_samples, double omega0) {
    if (n_samples < 16) {
        throw InvalidParams("make_wavelet: need at least 16 samples");
    }
    SampledWavelet w;
    w.family = family;
    w.samples.resize(n_samples);

    switch (family) {
        case MotherWavelet::haar_analytic: {
            if (n_samples % 2 != 0) {
                // an odd grid cannot split [0, 1) evenly at 1/2
                throw InvalidParams("make_wavelet: haar_analytic needs an even sample count");
            }
            // characteristic-function wavelet on [0, 1)
            w.t0 = 0.0;
            w.dt = 1.0 / static_cast<double>(n_samples);
            for (std::size_t i = 0; i < n_samples; ++i) {
                const double t = w.t0 + static_cast<double>(i) * w.dt;
                w.samples[i] = t < 0.5 ? 1.0 : -1.0;
            }
            break;
        }
        case MotherWavelet::morlet_real: {
            w.t0 = -8.0;
            w.dt = 16.0 / static_cast<double>(n_samples - 1);
            // unit-energy normalization of cos(w0 t) exp(-t^2/2)
            const double norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi) / 2.0 *
                                                (1.0 + std::exp(-omega0 * omega0)));
            for (std::size_t i = 0; i < n_samples; ++i) {
                const double t = w.t0 + static_cast<double>(i) * w.dt;
                w.samples[i] = norm * std::cos(omega0 * t) * std::exp(-t * t / 2.0);
            }
            break;
        }
        case MotherWavelet::mexican_hat: {
            w.t0 = -8.0;
            w.dt = 16.0 / static_cast<double>(n_samples - 1);
            const double norm = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
            for (std::size_t i = 0; i < n_samples; ++i) {
                const double t = w.t0 + static_cast<double>(i) * w.dt;
                w.samples[i] = norm * (1.0 - t * t) * std::exp(-t * t / 2.0);
            }
            break;
        }
    }
    return w;
}

AdmissibilityReport check_admissibility(const SampledWavelet& w) {
    if (w.dt <= 0.0 || w.samples.size() < 16) {
        throw InvalidParams("check_admissibility: need dt > 0 and >= 16 samples");
    }
    const double energy = w.energy();
    if (energy < 1e-12) {
        throw DegenerateWavelet("check_admissibility: sampled energy is ~0");
    }

    AdmissibilityReport rep;
    rep.zero_integral_residual = std::fabs(w.integral());
    rep.energy_residual = std::fabs(energy - 1.0);

    // quadrature of |Psi(nu)|^2 / nu over the positive DFT frequencies
    const std::size_t n = w.samples.size();
    const double dnu = 1.0 / (static_cast<double>(n) * w.dt);
    double c_psi = 0.0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        std::complex<double> acc{0.0, 0.0};
        const double base = -2.0 * std::numbers::pi * static_cast<double>(k) /
                            static_cast<double>(n);
        for (std::size_t m = 0; m < n; ++m) {
            const double phase = base * static_cast<double>(m);
            acc += w.samples[m] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        const double psi_mag = std::abs(acc) * w.dt;
        const double nu = static_cast<double>(k) * dnu;
        c_psi += psi_mag * psi_mag / nu * dnu;
    }
    rep.c_psi = c_psi;
    rep.c_psi_finite_positive = std::isfinite(c_psi) && c_psi > 0.0;
    return rep;
}

std::vector<double> dyadic_scales(double s_min, double s_max, int voices) {
    if (!(s_min > 0.0) || !(s_max >= s_min) || voices < 1) {
        throw InvalidScales("dyadic_scales: need 0 < s_min <= s_max, voices >= 1");
    }
    std::vector<double> scales;
    const double step = std::pow(2.0, 1.0 / static_cast<double>(voices));
    for (double s = s_min; s <= s_max * (1.0 + 1e-12); s *= step) {
        scales.push_back(s);
    }
    return scales;
}

Scalogram cwt_transform(std::span<const double> x, std::span<const double> scales,
                        const SampledWavelet& w) {
    if (x.size() < 4) {
        throw InvalidParams("cwt_transform: need at least 4 samples");
    }
    double prev = 0.0;
    for (double s : scales) {
        if (!(s > 0.0) || s <= prev) {
            throw InvalidScales("cwt_transform: scales must be positive and ascending");
        }
        prev = s;
    }

    const double t_min = w.t0;
    const double t_max = w.t0 + static_cast<double>(w.samples.size() - 1) * w.dt;
    const auto n = static_cast<std::ptrdiff_t>(x.size());

    Scalogram sg;
    sg.scales.assign(scales.begin(), scales.end());
    sg.n_times = x.size();
    sg.coefficients.resize(scales.size());

    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double s = scales[i];
        const auto m_lo = static_cast<std::ptrdiff_t>(std::ceil(s * t_min));
        const auto m_hi = static_cast<std::ptrdiff_t>(std::floor(s * t_max));

        // kernel K(m) = psi(m/s)/sqrt(s) by linear interpolation of the samples
        std::vector<double> kernel(static_cast<std::size_t>(m_hi - m_lo + 1));
        const double inv_sqrt_s = 1.0 / std::sqrt(s);
        for (std::ptrdiff_t m = m_lo; m <= m_hi; ++m) {
            const double pos = (static_cast<double>(m) / s - w.t0) / w.dt;
            const auto idx = static_cast<std::ptrdiff_t>(std::floor(pos));
            double value = 0.0;
            if (idx >= 0 && idx + 1 < static_cast<std::ptrdiff_t>(w.samples.size())) {
                const double frac = pos - static_cast<double>(idx);
                value = (1.0 - frac) * w.samples[static_cast<std::size_t>(idx)] +
                        frac * w.samples[static_cast<std::size_t>(idx) + 1];
            } else if (idx >= 0 && idx < static_cast<std::ptrdiff_t>(w.samples.size())) {
                value = w.samples[static_cast<std::size_t>(idx)];
            }
            kernel[static_cast<std::size_t>(m - m_lo)] = value * inv_sqrt_s;
        }

        // zero extension: rows are independent correlations
        auto& row = sg.coefficients[i];
        row.resize(x.size(), 0.0);
        for (std::ptrdiff_t tau = 0; tau < n; ++tau) {
            const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, tau + m_lo);
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, tau + m_hi);
            double acc = 0.0;
            for (std::ptrdiff_t t = lo; t <= hi; ++t) {
                acc += x[static_cast<std::size_t>(t)] *
                       kernel[static_cast<std::size_t>(t - tau - m_lo)];
            }
            row[static_cast<std::size_t>(tau)] = acc;
        }
    }
    return sg;
}

}  // namespace wavecp
