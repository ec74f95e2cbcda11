// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

namespace wavecp {

inline constexpr const char* k_version = "0.1.0";

}  // namespace wavecp
