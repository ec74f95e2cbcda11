// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/preprocess.hpp"

#include <cmath>
#include <numeric>

#include "wavecp/errors.hpp"
#include "wavecp/stats.hpp"

namespace wavecp {

TrendFit fit_linear_trend(const TimeSeries& x) {
    const std::size_t n = x.size();
    if (n < 3) {
        throw TooShort("fit_linear_trend: need at least 3 samples");
    }

    const double nn = static_cast<double>(n);
    const double t_bar = (nn + 1.0) / 2.0;
    double y_bar = 0.0;
    for (double v : x.values) y_bar += v;
    y_bar /= nn;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i + 1) - t_bar;
        sxx += dt * dt;
        sxy += dt * (x.values[i] - y_bar);
    }
    if (sxx <= 0.0) {
        throw DegenerateDesign("fit_linear_trend: degenerate time design");
    }

    TrendFit fit;
    fit.beta1 = sxy / sxx;
    fit.beta0 = y_bar - fit.beta1 * t_bar;
    fit.residuals.resize(n);
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = x.values[i] - (fit.beta0 + fit.beta1 * static_cast<double>(i + 1));
        fit.residuals[i] = r;
        rss += r * r;
    }
    const double dof = nn - 2.0;
    const double s2 = rss / dof;
    fit.residual_sd = std::sqrt(s2);
    fit.stderr1 = std::sqrt(s2 / sxx);
    fit.stderr0 = std::sqrt(s2 * (1.0 / nn + t_bar * t_bar / sxx));
    fit.p0 = fit.stderr0 > 0.0 ? student_t_two_sided_p(fit.beta0 / fit.stderr0, dof) : 1e-300;
    fit.p1 = fit.stderr1 > 0.0 ? student_t_two_sided_p(fit.beta1 / fit.stderr1, dof) : 1e-300;
    return fit;
}

TimeSeries first_difference(const TimeSeries& x, bool demean) {
    if (x.size() < 2) {
        throw TooShort("first_difference: need at least 2 samples");
    }
    TimeSeries r;
    r.values.resize(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        r.values[i - 1] = x.values[i] - x.values[i - 1];
    }
    if (demean) {
        double mean = 0.0;
        for (double v : r.values) mean += v;
        mean /= static_cast<double>(r.values.size());
        for (double& v : r.values) v -= mean;
    }
    if (x.start) {
        r.start = x.start->plus(1);  // r(t) labeled by the minuend month
    }
    return r;
}

TimeSeries truncate_to_dyadic(const TimeSeries& x, std::size_t target) {
    if (target == 0 || (target & (target - 1)) != 0) {
        throw InvalidParams("truncate_to_dyadic: target must be a power of two");
    }
    if (target > x.size()) {
        throw TargetTooLarge("truncate_to_dyadic: target " + std::to_string(target) +
                             " exceeds length " + std::to_string(x.size()));
    }
    const std::size_t drop = x.size() - target;
    TimeSeries out;
    out.values.assign(x.values.begin() + static_cast<std::ptrdiff_t>(drop), x.values.end());
    if (x.start) {
        out.start = x.start->plus(static_cast<int>(drop));
    }
    return out;
}

}  // namespace wavecp
