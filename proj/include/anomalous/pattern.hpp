// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anomalous/events.hpp"
#include "anomalous/windows.hpp"

namespace anomalous::ts {

/// Ground-truth anomalous window: a percent-change slice of a company's
/// volume with the insider-learning date at the window's center.
struct Pattern {
    int id = 0;
    std::string source_case;
    std::string ticker;
    Date learn_date;
    NormalizedWindow window;
};

/// Cuts the `size`-day window with the learn date at 0-based index
/// floor(size/2) (index 25 for the default 50) and returns it in
/// percent-change form. A learn date falling on a non-trading day snaps to
/// the next trading day. Throws, naming the deficit, when the series lacks
/// enough days on either side.
inline Pattern extract_pattern(const VolumeSeries& series, const corpus::EventRecord& event,
                               int size, bool epsilon_base = false) {
    if (size < 2) throw std::invalid_argument("extract_pattern: size must be >= 2");
    const std::size_t center = series.lower_bound(event.learn_date);  // snap to next trading day
    if (center >= series.size())
        throw std::runtime_error("extract_pattern: learn date " + event.learn_date.iso() +
                                 " is after the last trading day of " + series.ticker);

    const int before = size / 2;
    const int after = size - before;  // includes the center day
    if (static_cast<long>(center) < before)
        throw std::runtime_error("extract_pattern: " + series.ticker + " needs " +
                                 std::to_string(before) + " trading days before " +
                                 event.learn_date.iso() + ", has " + std::to_string(center));
    if (center + static_cast<std::size_t>(after) > series.size())
        throw std::runtime_error("extract_pattern: " + series.ticker + " needs " +
                                 std::to_string(after) + " trading days from " +
                                 event.learn_date.iso() + " on, has " +
                                 std::to_string(series.size() - center));

    Window w;
    w.ticker = series.ticker;
    w.start_index = static_cast<long>(center) - before;
    w.values.assign(series.volumes.begin() + w.start_index,
                    series.volumes.begin() + w.start_index + size);

    Pattern p;
    p.source_case = event.case_id;
    p.ticker = series.ticker;
    p.learn_date = series.dates[center];
    p.window = pct_change(w, epsilon_base);
    return p;
}

inline nlohmann::json pattern_to_json(const Pattern& p) {
    return nlohmann::json{{"id", p.id},
                          {"source_case", p.source_case},
                          {"ticker", p.ticker},
                          {"learn_date", p.learn_date.iso()},
                          {"base", p.window.base},
                          {"deltas", p.window.deltas}};
}

inline Pattern pattern_from_json(const nlohmann::json& j) {
    Pattern p;
    p.id = j.at("id").get<int>();
    p.source_case = j.at("source_case").get<std::string>();
    p.ticker = j.at("ticker").get<std::string>();
    const auto d = Date::parse_iso(j.at("learn_date").get<std::string>());
    if (!d) throw std::runtime_error("pattern: bad learn_date");
    p.learn_date = *d;
    p.window.base = j.at("base").get<double>();
    p.window.deltas = j.at("deltas").get<std::vector<double>>();
    return p;
}

inline void write_patterns_json(const std::filesystem::path& path,
                                const std::vector<Pattern>& patterns) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : patterns) arr.push_back(pattern_to_json(p));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << arr.dump(2) << '\n';
}

inline std::vector<Pattern> read_patterns_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    nlohmann::json arr = nlohmann::json::parse(in);
    std::vector<Pattern> out;
    for (const auto& j : arr) out.push_back(pattern_from_json(j));
    return out;
}

}  // namespace anomalous::ts
