// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavecp/changepoint.hpp"
#include "wavecp/preprocess.hpp"

namespace wavecp {

inline constexpr int k_report_schema_version = 1;

enum class PreprocessMode { diff, detrend };

struct AnalysisConfig {
    std::filesystem::path input;
    std::string wavelet = "la8";
    int levels = 4;
    double alpha = 0.05;
    PreprocessMode mode = PreprocessMode::diff;
    bool demean = true;
    bool bonferroni = false;  ///< split alpha across the tested levels
    MonteCarloConfig mc;
    std::optional<std::filesystem::path> output;
};

struct LevelEnergy {
    int level = 0;  ///< 0 denotes the smooth component
    double fraction = 0.0;
};

struct AnalysisReport {
    int schema_version = k_report_schema_version;
    std::string tool_version;
    std::string input_path;
    std::string input_digest;  ///< sha256 of the input bytes
    std::size_t input_rows = 0;
    std::string config_wavelet;
    int config_levels = 0;
    double config_alpha = 0.0;
    std::string config_mode;
    bool config_demean = true;
    bool config_bonferroni = false;
    std::size_t config_replicates = 0;
    std::uint64_t config_seed = 0;
    TrendFit trend;                  ///< fit of the raw series on t = 1..N
    std::size_t analyzed_length = 0; ///< dyadic length fed to the DWT
    std::optional<YearMonth> analyzed_start;
    std::vector<ChangePointReport> levels;
    std::vector<LevelEnergy> energy; ///< per-level fractions of analyzed energy
};

/// Serialize/parse the report (stable key order; lossless round trip).
std::string report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);

/// End-to-end pipeline: ingest -> trend fit (reported) -> difference or
/// detrend (+demean) -> truncate to the largest dyadic length -> DWT ->
/// per-level variance tests. Statistical outcomes never fail the run.
AnalysisReport run_analyze(const AnalysisConfig& cfg);

}  // namespace wavecp
