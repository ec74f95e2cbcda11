// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace wavecp {

/// SHA-256 of a byte buffer, lowercase hex.
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(const std::string& data);

}  // namespace wavecp
