// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavecp/filters.hpp"

namespace wavecp {

/// Pyramid DWT output. w[j-1] holds the level-j wavelet coefficients
/// (length n / 2^j), u the level-J scale coefficients (length n / 2^J).
///
/// Each level is stored with its boundary-affected coefficients (those whose
/// filter window wraps around the circular extension) rotated to the front,
/// so indices [0, L'_j) are boundary and [L'_j, n/2^j) are nonboundary with
/// L'_j = ceil((L-2) (1 - 2^-j)). idwt() undoes the rotation before
/// synthesis.
struct DwtCoefficients {
    std::vector<std::vector<double>> w;
    std::vector<double> u;
    std::size_t n = 0;       ///< original series length
    std::string filter_id;
    bool aligned = false;    ///< set by align_coefficients()

    int levels() const { return static_cast<int>(w.size()); }

    /// Plot layout [u_J | w_J | ... | w_1].
    std::vector<double> concatenated() const;
};

/// Full-length multiresolution components: input = smooth + sum of details.
struct MraDecomposition {
    std::vector<std::vector<double>> details;  ///< D_1..D_J, each length n
    std::vector<double> smooth;                ///< S_J, length n
};

/// Number of boundary-affected level-j coefficients for filter length L:
/// ceil((L-2) (1 - 2^-j)).
std::size_t boundary_count(std::size_t filter_length, int level);

/// Pyramid analysis: level recursion
///   u_j(n) = sum_k g(k - 2n) u_{j-1}(k),  w_j(n) = sum_k h(k - 2n) u_{j-1}(k)
/// with circular index arithmetic, u_0 = x. O(N) total work.
/// Throws LengthNotDivisible unless len(x) is divisible by 2^levels.
DwtCoefficients dwt(std::span<const double> x, const FilterPair& f, int levels);

/// Inverse transform; exact to rounding for the analysis filter.
/// Throws FilterMismatch if f.id differs from the analysis filter.
std::vector<double> idwt(const DwtCoefficients& c, const FilterPair& f);

/// Details D_j (synthesis of level-j wavelet coefficients alone) and smooth
/// S_J (synthesis of the scale coefficients alone).
MraDecomposition mra(std::span<const double> x, const FilterPair& f, int levels);

/// Level-j equivalent (cascade) filters on the original sampling grid:
/// g_j = (g upsampled 2^{j-1}) * g_{j-1}, likewise for the wavelet branch.
std::vector<double> equivalent_scaling_filter(const FilterPair& f, int level);
std::vector<double> equivalent_wavelet_filter(const FilterPair& f, int level);

/// Energy centroid sum(n f[n]^2) / sum(f[n]^2) of a filter.
double energy_centroid(std::span<const double> filter);

/// Circularly advance every level by the rounded group delay of its
/// equivalent filter (energy centroid / 2^j). Idempotent: a second call
/// returns the input unchanged (tracked by the `aligned` flag).
DwtCoefficients align_coefficients(const DwtCoefficients& c, const FilterPair& f);

}  // namespace wavecp
