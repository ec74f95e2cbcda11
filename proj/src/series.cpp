// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/series.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace wavecp {

YearMonth YearMonth::plus(int months) const {
    const int zero = year * 12 + (month - 1) + months;
    YearMonth out;
    out.year = zero >= 0 ? zero / 12 : -((-zero + 11) / 12);
    out.month = zero - out.year * 12 + 1;
    return out;
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

std::optional<YearMonth> parse_year_month(std::string_view s) {
    if (s.size() != 7 || s[4] != '-') {
        return std::nullopt;
    }
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return std::nullopt;
        }
    }
    int y = 0, m = 0;
    std::from_chars(s.data(), s.data() + 4, y);
    std::from_chars(s.data() + 5, s.data() + 7, m);
    if (m < 1 || m > 12) {
        return std::nullopt;
    }
    return YearMonth{y, m};
}

}  // namespace wavecp
