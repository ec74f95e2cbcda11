// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <vector>

#include "wavecp/series.hpp"

namespace wavecp {

/// Ordinary least squares of a series on t = 1..N.
struct TrendFit {
    double beta0 = 0.0;    ///< intercept
    double beta1 = 0.0;    ///< slope per month
    double stderr0 = 0.0;
    double stderr1 = 0.0;
    double p0 = 1.0;       ///< two-sided p-value, floored at 1e-300
    double p1 = 1.0;
    double residual_sd = 0.0;
    std::vector<double> residuals;
};

/// OLS fit with t-distribution p-values (N-2 degrees of freedom).
/// Requires len >= 3.
TrendFit fit_linear_trend(const TimeSeries& x);

/// r(t) = x(t) - x(t-1), length N-1; optionally subtract the sample mean of
/// the differenced series. Labels shift so r(t) carries the minuend's month.
TimeSeries first_difference(const TimeSeries& x, bool demean);

/// Keep the newest `target` samples (target a power of two <= len).
TimeSeries truncate_to_dyadic(const TimeSeries& x, std::size_t target);

}  // namespace wavecp
