// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "anomalous/csv.hpp"
#include "anomalous/impurity.hpp"
#include "anomalous/rng.hpp"
#include "anomalous/term_matrix.hpp"

namespace anomalous::text {

struct ExtraTreesParams {
    int n_trees = 100;
    int k_candidates = 0;  // 0 = floor(sqrt(n_terms)), minimum 1
    ClassWeights class_weights{1.0, 1.0};
    std::uint64_t seed = 0;
    int max_depth = 0;  // 0 = unbounded
    int min_leaf = 1;
};

struct FeatureRanking {
    std::vector<double> importances;  // nonnegative; sums to 1 when any split occurred
    std::vector<int> order;           // term indices, descending importance; zeros last
};

namespace detail {

// One extremely randomized tree: split attribute and threshold are both
// drawn at random (k candidate features, uniform threshold in the feature's
// node-local range); the best of the k candidates by weighted Gini decrease
// wins. Trains on the full sample, no bootstrap. Importance contributions
// accumulate into `importances`.
class ExtraTreeGrower {
public:
    ExtraTreeGrower(const TermMatrix& m, const std::vector<int>& labels,
                    const ExtraTreesParams& p, Rng rng, std::vector<double>& importances)
        : m_(m), labels_(labels), p_(p), rng_(rng), importances_(importances) {
        idx_.resize(m.n_rows());
        std::iota(idx_.begin(), idx_.end(), 0);
        feature_order_.resize(m.n_terms());
        Tally root;
        for (int i : idx_) root.add(labels_[i], p_.class_weights);
        total_weight_ = root.weight();
        grow(0, static_cast<int>(idx_.size()), root, 0);
    }

private:
    void grow(int begin, int end, const Tally& node, int depth) {
        const int n = end - begin;
        if (n < 2 || node.pure()) return;
        if (p_.max_depth > 0 && depth >= p_.max_depth) return;

        std::iota(feature_order_.begin(), feature_order_.end(), 0);
        const int k = p_.k_candidates > 0
                          ? p_.k_candidates
                          : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(m_.n_terms()))));

        int best_feature = -1;
        double best_threshold = 0.0, best_gain = -1.0;
        int examined = 0;
        // partial Fisher-Yates: draw features without replacement until k
        // usable (non-constant, min_leaf-respecting) candidates were scored
        for (std::size_t i = 0; i < feature_order_.size() && examined < k; ++i) {
            const std::size_t j = i + rng_.uniform_int(feature_order_.size() - i);
            std::swap(feature_order_[i], feature_order_[j]);
            const int f = feature_order_[i];

            double lo = 0, hi = 0;
            bool first = true;
            for (int r = begin; r < end; ++r) {
                const double v = m_.at(static_cast<std::size_t>(idx_[r]), f);
                if (first) {
                    lo = hi = v;
                    first = false;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            if (lo >= hi) continue;  // constant in this node

            const double t = rng_.uniform(lo, hi);
            Tally left, right;
            for (int r = begin; r < end; ++r) {
                const int row = idx_[r];
                if (m_.at(static_cast<std::size_t>(row), f) <= t)
                    left.add(labels_[row], p_.class_weights);
                else
                    right.add(labels_[row], p_.class_weights);
            }
            ++examined;
            if (left.count() < p_.min_leaf || right.count() < p_.min_leaf) continue;
            const double gain = split_gain(node, left, right, total_weight_);
            if (gain > best_gain) {
                best_gain = gain;
                best_feature = f;
                best_threshold = t;
            }
        }
        if (best_feature < 0 || best_gain < 0.0) return;

        Tally left, right;
        auto mid_it = std::stable_partition(idx_.begin() + begin, idx_.begin() + end, [&](int row) {
            return m_.at(static_cast<std::size_t>(row), best_feature) <= best_threshold;
        });
        const int mid = static_cast<int>(mid_it - idx_.begin());
        for (int r = begin; r < mid; ++r) left.add(labels_[idx_[r]], p_.class_weights);
        for (int r = mid; r < end; ++r) right.add(labels_[idx_[r]], p_.class_weights);

        importances_[static_cast<std::size_t>(best_feature)] += best_gain;
        grow(begin, mid, left, depth + 1);
        grow(mid, end, right, depth + 1);
    }

    const TermMatrix& m_;
    const std::vector<int>& labels_;
    const ExtraTreesParams& p_;
    Rng rng_;
    std::vector<double>& importances_;
    std::vector<int> idx_;
    std::vector<int> feature_order_;
    double total_weight_ = 0;
};

}  // namespace detail

/// Ranks terms by mean weighted Gini-impurity decrease over an ensemble of
/// extremely randomized trees, normalized to sum 1. Deterministic given the
/// seed: every tree draws from a stream derived from (seed, tree index), so
/// the result does not depend on evaluation order.
inline FeatureRanking rank_features(const TermMatrix& m, const std::vector<int>& labels,
                                    const ExtraTreesParams& params) {
    if (labels.size() != m.n_rows())
        throw std::invalid_argument("rank_features: labels not parallel to rows");
    if (params.n_trees < 1) throw std::invalid_argument("rank_features: n_trees must be >= 1");

    FeatureRanking r;
    r.importances.assign(m.n_terms(), 0.0);
    const Rng master(params.seed);
    for (int t = 0; t < params.n_trees; ++t)
        detail::ExtraTreeGrower(m, labels, params, master.derive(static_cast<std::uint64_t>(t)),
                                r.importances);

    for (double& v : r.importances) v /= static_cast<double>(params.n_trees);
    const double sum = std::accumulate(r.importances.begin(), r.importances.end(), 0.0);
    if (sum > 0.0)
        for (double& v : r.importances) v /= sum;

    r.order.resize(m.n_terms());
    std::iota(r.order.begin(), r.order.end(), 0);
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) {
        return r.importances[static_cast<std::size_t>(a)] > r.importances[static_cast<std::size_t>(b)];
    });
    return r;
}

/// Keeps exactly the terms with importance > 0, preserving vocabulary order.
/// Throws when nothing would remain.
inline TermMatrix reduce_features(const TermMatrix& m, const FeatureRanking& ranking) {
    if (ranking.importances.size() != m.n_terms())
        throw std::invalid_argument("reduce_features: ranking does not match vocabulary");
    std::vector<int> remap(m.n_terms(), -1);
    TermMatrix out;
    for (std::size_t i = 0; i < m.n_terms(); ++i) {
        if (ranking.importances[i] > 0.0) {
            remap[i] = static_cast<int>(out.vocabulary.size());
            out.vocabulary.push_back(m.vocabulary[i]);
        }
    }
    if (out.vocabulary.empty())
        throw std::runtime_error("reduce_features: every term has zero importance");

    out.rows.reserve(m.n_rows());
    for (const auto& row : m.rows) {
        std::vector<std::pair<int, double>> r;
        for (const auto& [col, v] : row)
            if (remap[static_cast<std::size_t>(col)] >= 0)
                r.emplace_back(remap[static_cast<std::size_t>(col)], v);
        out.rows.push_back(std::move(r));
    }
    out.labels = m.labels;
    return out;
}

/// CSV export: term,importance,rank (rank 1 = most important).
inline void write_ranking_csv(const std::filesystem::path& path, const TermMatrix& m,
                              const FeatureRanking& r) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "term,importance,rank\n";
    for (std::size_t rank = 0; rank < r.order.size(); ++rank) {
        const int term = r.order[rank];
        out << csv_escape(m.vocabulary[static_cast<std::size_t>(term)]) << ','
            << format_double(r.importances[static_cast<std::size_t>(term)]) << ',' << (rank + 1)
            << '\n';
    }
}

}  // namespace anomalous::text
