// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <filesystem>
#include <string>

#include "wavecp/series.hpp"

namespace wavecp {

/// Read a monthly series. Two layouts are accepted:
///   date,<name>   one row per consecutive month, date formatted YYYY-MM
///   value         (or a bare numeric column) for unlabeled samples
/// Gaps or reordering in the month sequence are rejected with ParseError;
/// a missing file raises InputNotFound.
TimeSeries read_series_csv(const std::filesystem::path& path);

/// Write values (and month labels when present) as CSV.
void write_series_csv(const std::filesystem::path& path, const TimeSeries& x,
                      const std::string& value_name = "value");

}  // namespace wavecp
