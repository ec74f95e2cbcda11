// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wavecp {

/// Calendar month, used to label monthly series.
struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    YearMonth plus(int months) const;
    std::string str() const;  ///< "YYYY-MM"
    bool operator==(const YearMonth&) const = default;
};

/// Parse "YYYY-MM"; returns nullopt on malformed input.
std::optional<YearMonth> parse_year_month(std::string_view s);

/// A monthly-cadence series of real samples with an optional calendar label
/// for the first sample. Labels of later samples are implied by the cadence.
struct TimeSeries {
    std::vector<double> values;
    std::optional<YearMonth> start;

    std::size_t size() const { return values.size(); }

    /// Label of sample i (requires start).
    YearMonth label(std::size_t i) const { return start->plus(static_cast<int>(i)); }
};

}  // namespace wavecp
