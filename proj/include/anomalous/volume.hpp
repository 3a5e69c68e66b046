// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalous/csv.hpp"
#include "anomalous/date.hpp"

namespace anomalous::ts {

/// Daily transaction volumes for one ticker; dates strictly increasing,
/// volumes nonnegative share counts.
struct VolumeSeries {
    std::string ticker;
    std::vector<Date> dates;
    std::vector<std::int64_t> volumes;  // parallel to dates

    std::size_t size() const { return dates.size(); }

    /// Index of the first date >= d, or size() when none.
    std::size_t lower_bound(const Date& d) const {
        return static_cast<std::size_t>(std::lower_bound(dates.begin(), dates.end(), d) -
                                        dates.begin());
    }
};

/// Loads a Yahoo-Finance-layout CSV (`Date,Open,High,Low,Close,Adj Close,
/// Volume`); only the Date and Volume columns are required, anything else is
/// ignored. Rows come back sorted by date. Missing columns and duplicate
/// dates are fatal; an unparsable row is skipped with a warning. Optional
/// [since, until] bounds restrict the rows kept.
inline VolumeSeries load_volume_csv(const std::filesystem::path& path, const std::string& ticker,
                                    std::vector<std::string>* warnings = nullptr,
                                    const Date* since = nullptr, const Date* until = nullptr) {
    const CsvTable table = read_csv(path);
    const int c_date = table.column("Date");
    const int c_vol = table.column("Volume");
    if (c_date < 0 || c_vol < 0)
        throw std::runtime_error("volume CSV " + path.string() +
                                 ": required columns Date and Volume not found");

    std::vector<std::pair<Date, std::int64_t>> rows;
    std::size_t lineno = 1;
    for (const auto& row : table.rows) {
        ++lineno;
        const auto warn = [&](const std::string& what) {
            if (warnings)
                warnings->push_back(path.string() + " row " + std::to_string(lineno) + " skipped: " +
                                    what);
        };
        if (static_cast<std::size_t>(std::max(c_date, c_vol)) >= row.size()) {
            warn("too few fields");
            continue;
        }
        const auto date = Date::parse_iso(row[static_cast<std::size_t>(c_date)]);
        if (!date) {
            warn("bad date '" + row[static_cast<std::size_t>(c_date)] + "'");
            continue;
        }
        long long vol;
        if (!parse_long(row[static_cast<std::size_t>(c_vol)], vol) || vol < 0) {
            warn("bad volume '" + row[static_cast<std::size_t>(c_vol)] + "'");
            continue;
        }
        if (since && *date < *since) continue;
        if (until && *until < *date) continue;
        rows.emplace_back(*date, static_cast<std::int64_t>(vol));
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw std::runtime_error("volume CSV " + path.string() + ": duplicate date " +
                                     rows[i].first.iso());

    VolumeSeries s;
    s.ticker = ticker;
    s.dates.reserve(rows.size());
    s.volumes.reserve(rows.size());
    for (auto& [d, v] : rows) {
        s.dates.push_back(d);
        s.volumes.push_back(v);
    }
    return s;
}

}  // namespace anomalous::ts
