// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <array>

namespace anomalous::text {

/// Per-class sample weights, indexed by class label (0 = non-insider,
/// 1 = insider).
using ClassWeights = std::array<double, 2>;

namespace detail {

struct Tally {
    std::array<double, 2> weighted{0.0, 0.0};
    std::array<long, 2> raw{0, 0};

    void add(int label, const ClassWeights& w) {
        weighted[label] += w[label];
        ++raw[label];
    }
    void remove(int label, const ClassWeights& w) {
        weighted[label] -= w[label];
        --raw[label];
    }
    double weight() const { return weighted[0] + weighted[1]; }
    long count() const { return raw[0] + raw[1]; }
    bool pure() const { return raw[0] == 0 || raw[1] == 0; }

    double gini() const {
        const double total = weight();
        if (total <= 0.0) return 0.0;
        const double p0 = weighted[0] / total;
        const double p1 = weighted[1] / total;
        return 1.0 - p0 * p0 - p1 * p1;
    }
};

/// Weighted Gini decrease of a candidate split, scaled by the node's share
/// of the total weight (so importances accumulate on a common scale).
inline double split_gain(const Tally& node, const Tally& left, const Tally& right,
                         double total_weight) {
    const double wn = node.weight();
    if (wn <= 0.0 || total_weight <= 0.0) return 0.0;
    const double children = (left.weight() / wn) * left.gini() + (right.weight() / wn) * right.gini();
    return (wn / total_weight) * (node.gini() - children);
}

}  // namespace detail
}  // namespace anomalous::text
