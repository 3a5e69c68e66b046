// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <array>
#include <compare>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "anomalous/common.hpp"

namespace anomalous {

/// Proleptic Gregorian calendar date.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    friend auto operator<=>(const Date&, const Date&) = default;

    bool valid() const {
        if (month < 1 || month > 12 || day < 1) return false;
        return day <= days_in_month(year, month);
    }

    /// Days since 1970-01-01 (may be negative).
    long serial() const {
        // civil-calendar day count, era-based
        const int y = year - (month <= 2);
        const long era = (y >= 0 ? y : y - 399) / 400;
        const unsigned yoe = static_cast<unsigned>(y - era * 400);
        const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
        const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        return era * 146097 + static_cast<long>(doe) - 719468;
    }

    static Date from_serial(long z) {
        z += 719468;
        const long era = (z >= 0 ? z : z - 146096) / 146097;
        const unsigned doe = static_cast<unsigned>(z - era * 146097);
        const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
        const long y = static_cast<long>(yoe) + era * 400;
        const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
        const unsigned mp = (5 * doy + 2) / 153;
        const unsigned d = doy - (153 * mp + 2) / 5 + 1;
        const unsigned m = mp + (mp < 10 ? 3 : -9);
        return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
    }

    Date plus_days(long n) const { return from_serial(serial() + n); }

    std::string iso() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        return buf;
    }

    /// Strict YYYY-MM-DD.
    static std::optional<Date> parse_iso(std::string_view s) {
        s = trim(s);
        if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
        long long y, m, d;
        if (!parse_long(s.substr(0, 4), y) || !parse_long(s.substr(5, 2), m) ||
            !parse_long(s.substr(8, 2), d))
            return std::nullopt;
        Date date{static_cast<int>(y), static_cast<int>(m), static_cast<int>(d)};
        if (!date.valid()) return std::nullopt;
        return date;
    }

    static int days_in_month(int y, int m) {
        static constexpr std::array<int, 12> k{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        if (m == 2 && (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))) return 29;
        return k[m - 1];
    }
};

/// English month name (case-insensitive) to 1..12, or 0 if unknown.
inline int month_from_name(std::string_view name) {
    static constexpr std::array<std::string_view, 12> names{
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december"};
    const std::string low = lower_ascii(name);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (low == names[i]) return static_cast<int>(i) + 1;
    return 0;
}

}  // namespace anomalous
