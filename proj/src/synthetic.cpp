// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/synthetic.hpp"

#include <cmath>

#include "wavecp/changepoint.hpp"
#include "wavecp/errors.hpp"

namespace wavecp {

TimeSeries generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                              std::uint64_t seed) {
    if (params.n < 4) {
        throw InvalidParams("generate_synthetic: n must be >= 4");
    }
    TimeSeries out;
    out.values.resize(params.n);

    switch (kind) {
        case SyntheticKind::sinusoids: {
            for (std::size_t i = 0; i < params.n; ++i) {
                const double t = static_cast<double>(i);
                out.values[i] = std::sin(3.0 * t) + std::sin(0.3 * t) + std::sin(0.03 * t);
            }
            break;
        }
        case SyntheticKind::varshift: {
            if ((params.n & (params.n - 1)) != 0) {
                throw InvalidParams("varshift: n must be a power of two");
            }
            if (params.change_index > params.n) {
                throw InvalidParams("varshift: change index beyond the series");
            }
            if (!(params.sigma_before > 0.0) || !(params.sigma_after > 0.0)) {
                throw InvalidParams("varshift: sigmas must be positive");
            }
            detail::GaussianStream gs(seed);
            for (std::size_t i = 0; i < params.n; ++i) {
                const double sigma =
                    i < params.change_index ? params.sigma_before : params.sigma_after;
                out.values[i] = sigma * gs.next();
            }
            break;
        }
        case SyntheticKind::discontinuity: {
            if (!(params.decay > 0.0)) {
                throw InvalidParams("discontinuity: decay must be positive");
            }
            std::size_t t0;
            if (params.break_index >= 0) {
                if (static_cast<std::size_t>(params.break_index) >= params.n) {
                    throw InvalidParams("discontinuity: break beyond the series");
                }
                t0 = static_cast<std::size_t>(params.break_index);
            } else {
                // seed-derived placement away from the boundaries
                const std::size_t margin = params.n / 6;
                const std::size_t span = params.n - 2 * margin;
                std::uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
                state ^= state >> 33;
                state *= 0xff51afd7ed558ccdull;
                state ^= state >> 33;
                t0 = margin + static_cast<std::size_t>(state % span);
            }
            for (std::size_t i = 0; i < params.n; ++i) {
                out.values[i] =
                    i >= t0 ? std::exp(-(static_cast<double>(i - t0)) / params.decay) : 0.0;
            }
            break;
        }
    }
    return out;
}

}  // namespace wavecp
