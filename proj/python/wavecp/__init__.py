# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 wavecp contributors

"""Wavelet transforms and variance change-point analysis."""

from wavecp._core import (  # noqa: F401
    AdmissibilityReport,
    AnalysisReport,
    ChangePointReport,
    CusumResult,
    DwtCoefficients,
    FilterPair,
    InsufficientDataError,
    LengthNotDivisibleError,
    MonteCarloConfig,
    MotherWavelet,
    MraDecomposition,
    NonboundaryRange,
    Periodogram,
    Scalogram,
    SampledWavelet,
    SyntheticKind,
    TrendFit,
    UnsupportedFilterError,
    ValidationCheck,
    ValidationReport,
    WaveletFamily,
    WavecpError,
    ZeroEnergyError,
    __version__,
    align_coefficients,
    boundary_count,
    catalog_ids,
    check_admissibility,
    critical_value,
    cusum_statistic,
    cwt_transform,
    detect_changepoints,
    dominant_peaks,
    dwt,
    dyadic_scales,
    filter_catalog,
    first_difference,
    fit_linear_trend,
    frequency_response,
    generate_synthetic,
    idwt,
    make_wavelet,
    mra,
    nonboundary_range,
    periodogram,
    qmf_from_scaling,
    read_series_csv,
    run_analyze,
    test_level,
    truncate_to_dyadic,
    validate_filter,
)
