// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/filters.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "wavecp/errors.hpp"

namespace wavecp {

std::string to_string(WaveletFamily family) {
    switch (family) {
        case WaveletFamily::haar: return "haar";
        case WaveletFamily::daubechies: return "daubechies";
        case WaveletFamily::least_asymmetric: return "least_asymmetric";
        case WaveletFamily::coiflet: return "coiflet";
    }
    return "?";
}

std::vector<double> qmf_from_scaling(std::span<const double> g) {
    if (g.empty()) {
        throw InvalidParams("qmf_from_scaling: empty filter");
    }
    const std::size_t L = g.size();
    std::vector<double> h(L);
    for (std::size_t n = 0; n < L; ++n) {
        h[n] = (n % 2 == 0 ? 1.0 : -1.0) * g[L - 1 - n];
    }
    return h;
}

namespace {

FilterPair from_entry(const detail::CatalogEntry& e) {
    FilterPair f;
    f.g.assign(e.g.begin(), e.g.end());
    f.h = qmf_from_scaling(f.g);
    f.family = e.family;
    f.order = e.order;
    f.vanishing_moments = e.vanishing_moments;
    f.id = e.id;
    return f;
}

}  // namespace

FilterPair filter_catalog(WaveletFamily family, int order) {
    for (auto* e = detail::catalog_begin(); e != detail::catalog_end(); ++e) {
        if (e->family == family && e->order == order) {
            return from_entry(*e);
        }
    }
    throw UnsupportedFilter("no catalog filter for family " + to_string(family) +
                            " order " + std::to_string(order));
}

FilterPair filter_catalog(std::string_view id) {
    for (auto* e = detail::catalog_begin(); e != detail::catalog_end(); ++e) {
        if (id == e->id) {
            return from_entry(*e);
        }
    }
    throw UnsupportedFilter("unknown filter id '" + std::string(id) + "'");
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    for (auto* e = detail::catalog_begin(); e != detail::catalog_end(); ++e) {
        out.emplace_back(e->id);
    }
    return out;
}

ValidationReport validate_filter(const FilterPair& f) {
    ValidationReport rep;
    auto add = [&rep](std::string name, double residual, double tol) {
        rep.checks.push_back({std::move(name), residual, tol, residual <= tol});
    };

    const std::size_t L = f.g.size();
    if (L == 0 || f.h.size() != L || L % 2 != 0) {
        add("even matched lengths", 1.0, 0.0);
        rep.pass = false;
        return rep;
    }

    long double sum = 0.0L, energy_g = 0.0L, energy_h = 0.0L;
    for (std::size_t n = 0; n < L; ++n) {
        sum += f.g[n];
        energy_g += static_cast<long double>(f.g[n]) * f.g[n];
        energy_h += static_cast<long double>(f.h[n]) * f.h[n];
    }
    add("sum g = sqrt(2)", std::abs(static_cast<double>(sum - std::numbers::sqrt2_v<long double>)), 1e-12);
    add("unit energy g", std::abs(static_cast<double>(energy_g - 1.0L)), 1e-12);
    add("unit energy h", std::abs(static_cast<double>(energy_h - 1.0L)), 1e-12);

    double worst_shift = 0.0;
    for (std::size_t m = 1; 2 * m < L; ++m) {
        long double ip = 0.0L;
        for (std::size_t n = 0; n + 2 * m < L; ++n) {
            ip += static_cast<long double>(f.g[n]) * f.g[n + 2 * m];
        }
        worst_shift = std::max(worst_shift, std::abs(static_cast<double>(ip)));
    }
    add("even-shift orthonormality", worst_shift, 1e-10);

    double mirror = 0.0;
    for (std::size_t n = 0; n < L; ++n) {
        const double expect = (n % 2 == 0 ? 1.0 : -1.0) * f.g[L - 1 - n];
        mirror = std::max(mirror, std::abs(f.h[n] - expect));
    }
    add("mirror relation h[n] = (-1)^n g[L-1-n]", mirror, 0.0);

    // Moment sums evaluated about the wavelet filter's energy centroid; the
    // centered form spans the same polynomial conditions but avoids the n^m
    // amplification of coefficient rounding for long filters.
    long double centroid = 0.0L;
    for (std::size_t n = 0; n < L; ++n) {
        centroid += static_cast<long double>(n) * f.h[n] * f.h[n];
    }
    centroid /= energy_h;
    double worst_moment = 0.0;
    for (int m = 0; m < f.vanishing_moments; ++m) {
        long double s = 0.0L;
        for (std::size_t n = 0; n < L; ++n) {
            s += f.h[n] * std::pow(static_cast<long double>(n) - centroid,
                                   static_cast<long double>(m));
        }
        worst_moment = std::max(worst_moment, std::abs(static_cast<double>(s)));
    }
    add("vanishing moments m < " + std::to_string(f.vanishing_moments), worst_moment, 1e-8);

    rep.pass = true;
    for (const auto& c : rep.checks) {
        rep.pass = rep.pass && c.pass;
    }
    return rep;
}

std::vector<double> frequency_response(std::span<const double> filter,
                                       std::size_t n_points) {
    if (n_points < 2) {
        throw InvalidParams("frequency_response: need at least 2 grid points");
    }
    std::vector<double> mag(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double nu = 0.5 * static_cast<double>(i) / static_cast<double>(n_points - 1);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t n = 0; n < filter.size(); ++n) {
            const double phase = -2.0 * std::numbers::pi * nu * static_cast<double>(n);
            acc += filter[n] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        mag[i] = std::abs(acc);
    }
    return mag;
}

}  // namespace wavecp
