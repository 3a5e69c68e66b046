// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalous/volume.hpp"

namespace anomalous::ts {

/// A slice of consecutive daily volumes out of a parent series.
struct Window {
    std::string ticker;
    long start_index = 0;  // offset into the parent series
    std::vector<std::int64_t> values;

    int size() const { return static_cast<int>(values.size()); }
};

/// A window in percent-change form: deltas[i] = values[i]/base - 1, so
/// deltas[0] is always 0 and the representation is invariant to scaling the
/// raw volumes.
struct NormalizedWindow {
    double base = 0;  // volume of day 0
    std::vector<double> deltas;

    int size() const { return static_cast<int>(deltas.size()); }
};

/// Percent-change transform. The base is the first value; a zero base is an
/// error unless `epsilon_base` substitutes base = 1 (halted-trading days).
inline NormalizedWindow pct_change(std::span<const std::int64_t> values,
                                   bool epsilon_base = false) {
    if (values.empty()) throw std::invalid_argument("pct_change: empty window");
    double base = static_cast<double>(values[0]);
    if (base <= 0.0) {
        if (!epsilon_base)
            throw std::invalid_argument("pct_change: base volume is zero (day 0 of the window)");
        base = 1.0;
    }
    NormalizedWindow out;
    out.base = base;
    out.deltas.reserve(values.size());
    for (const std::int64_t v : values) out.deltas.push_back(static_cast<double>(v) / base - 1.0);
    out.deltas[0] = 0.0;
    return out;
}

inline NormalizedWindow pct_change(const Window& w, bool epsilon_base = false) {
    return pct_change(std::span<const std::int64_t>(w.values), epsilon_base);
}

/// Tiles the series into windows at offsets 0, stride, 2*stride, ...;
/// a trailing partial window is dropped. stride 0 means stride = size
/// (non-overlapping tiling, the default).
inline std::vector<Window> make_windows(const VolumeSeries& series, int size, int stride = 0) {
    if (size < 2) throw std::invalid_argument("make_windows: size must be >= 2");
    if (stride == 0) stride = size;
    if (stride < 1) throw std::invalid_argument("make_windows: stride must be >= 1");

    std::vector<Window> out;
    for (std::size_t start = 0; start + static_cast<std::size_t>(size) <= series.size();
         start += static_cast<std::size_t>(stride)) {
        Window w;
        w.ticker = series.ticker;
        w.start_index = static_cast<long>(start);
        w.values.assign(series.volumes.begin() + static_cast<long>(start),
                        series.volumes.begin() + static_cast<long>(start) + size);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace anomalous::ts
