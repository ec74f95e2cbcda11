// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <cstdint>
#include <vector>

#include "wavecp/series.hpp"

namespace wavecp {

enum class SyntheticKind { sinusoids, varshift, discontinuity };

struct SyntheticParams {
    std::size_t n = 1024;
    // varshift
    double sigma_before = 1.0;
    double sigma_after = 3.0;
    std::size_t change_index = 512;  ///< first sample drawn at sigma_after
    // discontinuity
    double decay = 32.0;             ///< exponential time constant after the break
    long break_index = -1;           ///< < 0: derive from seed
};

/// Deterministic test signals.
///  - sinusoids: sin(3t) + sin(0.3t) + sin(0.03t), unit sample step
///  - varshift: iid Gaussians with a standard-deviation step (n power of two)
///  - discontinuity: zero, then a unit jump at the break decaying with the
///    given time constant
TimeSeries generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                              std::uint64_t seed);

}  // namespace wavecp
