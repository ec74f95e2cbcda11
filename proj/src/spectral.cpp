// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavecp/errors.hpp"

namespace wavecp {

Periodogram periodogram(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 4) {
        throw TooShort("periodogram: need at least 4 samples");
    }
    const std::size_t half = n / 2;

    Periodogram p;
    p.frequencies.resize(half + 1);
    p.power.resize(half + 1);

    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k <= half; ++k) {
        double re = 0.0, im = 0.0;
        const double base = -2.0 * std::numbers::pi * static_cast<double>(k) / nd;
        for (std::size_t t = 0; t < n; ++t) {
            const double phase = base * static_cast<double>(t);
            re += x[t] * std::cos(phase);
            im += x[t] * std::sin(phase);
        }
        const double mag2 = re * re + im * im;
        // one-sided normalization: sum(power) == mean(x^2)
        double scale = 2.0 / (nd * nd);
        if (k == 0 || (n % 2 == 0 && k == half)) {
            scale = 1.0 / (nd * nd);
        }
        p.frequencies[k] = static_cast<double>(k) / nd;
        p.power[k] = mag2 * scale;
    }
    return p;
}

std::vector<std::size_t> dominant_peaks(const Periodogram& p, std::size_t k) {
    std::vector<std::pair<double, std::size_t>> local;
    for (std::size_t i = 1; i + 1 < p.power.size(); ++i) {
        if (p.power[i] > p.power[i - 1] && p.power[i] >= p.power[i + 1]) {
            local.emplace_back(p.power[i], i);
        }
    }
    std::sort(local.begin(), local.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < std::min(k, local.size()); ++i) {
        out.push_back(local[i].second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wavecp
