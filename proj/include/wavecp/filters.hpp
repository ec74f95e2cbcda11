// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavecp {

enum class WaveletFamily { haar, daubechies, least_asymmetric, coiflet };

std::string to_string(WaveletFamily family);

/// An orthonormal scaling/wavelet filter pair. The wavelet filter is tied to
/// the scaling filter by the quadrature mirror relation
///   h[n] = (-1)^n g[L-1-n]
/// and both filters are causal, indexed 0..L-1.
struct FilterPair {
    std::vector<double> g;  ///< scaling (low-pass) filter
    std::vector<double> h;  ///< wavelet (high-pass) filter
    WaveletFamily family = WaveletFamily::haar;
    int order = 1;             ///< catalog order (db N, coif K, LA length)
    int vanishing_moments = 1; ///< N: wavelet moments 0..N-1 vanish
    std::string id;            ///< catalog key, e.g. "db4", "la8"

    std::size_t length() const { return g.size(); }
};

/// Mirror a scaling filter into its wavelet filter: h[n] = (-1)^n g[L-1-n].
std::vector<double> qmf_from_scaling(std::span<const double> g);

/// Look up a filter pair from the built-in catalog.
/// Supported: (haar, 1); (daubechies, 2..10); (least_asymmetric, 8);
/// (coiflet, 1..5). Throws UnsupportedFilter otherwise.
FilterPair filter_catalog(WaveletFamily family, int order);

/// Catalog lookup by id string ("haar", "db2".."db10", "la8", "coif1".."coif5").
FilterPair filter_catalog(std::string_view id);

/// Ids of every catalog entry, in catalog order.
std::vector<std::string> catalog_ids();

/// One validated condition: measured residual against its tolerance.
struct ValidationCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass = false;  ///< true iff every check passed
};

/// Check the filter-pair conditions: sum g = sqrt(2), unit energy of g and h,
/// even-shift orthonormality of g, the exact mirror relation, and vanishing
/// wavelet moments up to the declared order. Failures are reported, never
/// thrown.
ValidationReport validate_filter(const FilterPair& f);

/// |F(nu)| on an n_points uniform grid over nu in [0, 1/2],
/// F(nu) = sum_n f[n] exp(-j 2 pi nu n).
std::vector<double> frequency_response(std::span<const double> filter,
                                       std::size_t n_points);

namespace detail {

struct CatalogEntry {
    const char* id;
    WaveletFamily family;
    int order;
    int vanishing_moments;
    std::span<const double> g;
};

const CatalogEntry* catalog_begin();
const CatalogEntry* catalog_end();

}  // namespace detail

}  // namespace wavecp
