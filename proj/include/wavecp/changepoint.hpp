// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wavecp/dwt.hpp"
#include "wavecp/series.hpp"

namespace wavecp {

/// Slice of level-j coefficients unaffected by the circular boundary.
struct NonboundaryRange {
    int level = 0;
    std::size_t first_index = 0;  ///< L'_j
    std::size_t count = 0;        ///< N'_j = N_j - L'_j
    std::size_t total = 0;        ///< N_j

    bool sufficient() const { return count >= 8; }
};

/// L'_j = ceil((L-2)(1-2^-j)), N_j = n / 2^j. Throws InsufficientData when
/// fewer than 8 nonboundary coefficients remain.
NonboundaryRange nonboundary_range(int level, const FilterPair& f, std::size_t n);

struct CusumResult {
    double d = 0.0;         ///< max(D+, D-)
    std::size_t k_star = 0; ///< smallest argmax of |P_k - k/M|, 1-based
};

/// Normalized cumulative sum of squares statistic:
///   P_k   = sum_{i<=k} v_i^2 / sum_i v_i^2
///   D+    = max_k ( k/(M-1) - P_k ),   D- = max_k ( P_k - (k-1)/(M-1) )
/// over k = 1..M-1, d = max(D+, D-). Requires M >= 8; throws ZeroEnergy when
/// the vector has no energy. Scale-invariant.
CusumResult cusum_statistic(std::span<const double> v);

struct MonteCarloConfig {
    std::size_t replicates = 100000;
    std::uint64_t seed = 0x77617665u;  ///< deterministic default
    int threads = 0;                   ///< 0 = hardware concurrency
};

/// (1-alpha) empirical quantile of d over replicated draws of m iid standard
/// Gaussians. Deterministic given the seed and independent of thread count.
/// Results are cached in memory and, when WAVECP_CACHE_DIR is set, on disk.
double critical_value(std::size_t m, double alpha, const MonteCarloConfig& mc);

struct ChangePointReport {
    int level = 0;
    double d_statistic = 0.0;
    double critical_value = 0.0;
    double alpha = 0.05;
    bool reject = false;
    std::size_t k_star = 0;                   ///< coefficient-domain cusum argmax
    std::optional<std::size_t> location;      ///< 0-based series index, set iff reject
    std::optional<YearMonth> location_label;  ///< set when the series is labeled
    std::size_t nonboundary_count = 0;
    std::size_t nonboundary_first = 0;
};

/// Homogeneity-of-variance test on the nonboundary level-j coefficients.
/// Rejects when the cusum d exceeds the Monte Carlo critical value. On
/// rejection the change time is located by the two-segment Gaussian variance
/// profile likelihood over the squares of the series reconstructed from the
/// coefficients, scanned across the time window the nonboundary coefficients
/// cover. `start` (when given) labels the located month.
ChangePointReport test_level(const DwtCoefficients& c, int level, const FilterPair& f,
                             double alpha, const MonteCarloConfig& mc,
                             const std::optional<YearMonth>& start = std::nullopt);

/// Run test_level for every level 1..J that has a sufficient nonboundary
/// range. The input series must already be preprocessed (differenced,
/// demeaned, dyadic length).
std::vector<ChangePointReport> detect_changepoints(const TimeSeries& x, const FilterPair& f,
                                                   int levels, double alpha,
                                                   const MonteCarloConfig& mc);

namespace detail {

/// Argmax over k in [k_lo, k_hi] of the two-segment variance contrast
///   -(k log(S_k/k) + (M-k) log((S_M-S_k)/(M-k)))
/// on the squares of `series`; k is the number of pre-change samples, so the
/// change starts at 0-based index k. Returns nullopt when no k is admissible.
std::optional<std::size_t> variance_split_point(std::span<const double> series,
                                                std::size_t k_lo, std::size_t k_hi);

/// Deterministic standard normal generator used by the Monte Carlo engine.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed);
    double next();

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
    double uniform();
};

}  // namespace detail

}  // namespace wavecp
