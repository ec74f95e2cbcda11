// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <span>
#include <vector>

namespace wavecp {

/// One-sided periodogram on frequencies k/N, k = 0..N/2 (cycles/sample).
/// Power is normalized so that sum(power) equals mean(x^2).
struct Periodogram {
    std::vector<double> frequencies;
    std::vector<double> power;
};

/// Plain periodogram from the squared DFT magnitude (direct transform; the
/// inputs here are desk-scale). Requires len >= 4.
Periodogram periodogram(std::span<const double> x);

/// Indices of the `k` largest strict local maxima of power (excluding DC).
std::vector<std::size_t> dominant_peaks(const Periodogram& p, std::size_t k);

}  // namespace wavecp
