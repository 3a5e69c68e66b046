// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anomalous/impurity.hpp"
#include "anomalous/term_matrix.hpp"

namespace anomalous::text {

struct TreeParams {
    int max_depth = 0;  // 0 = unbounded
    int min_leaf = 1;
    ClassWeights class_weights{1.0, 1.0};
    std::uint64_t seed = 0;  // recorded for provenance; CART training is deterministic
};

struct TreeNode {
    int term = -1;         // split term index, -1 for a leaf
    double threshold = 0;  // go left when value <= threshold
    int left = -1;
    int right = -1;
    int klass = 0;                      // weighted majority class at this node
    std::array<double, 2> counts{0, 0};  // raw sample counts per class
    bool is_leaf() const { return term < 0; }
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::vector<std::string> vocabulary;
    TreeParams params;
    int depth = 0;
};

namespace detail {

class CartGrower {
public:
    CartGrower(const TermMatrix& m, const std::vector<int>& labels, const TreeParams& p,
               DecisionTreeModel& model)
        : m_(m), labels_(labels), p_(p), model_(model) {
        idx_.resize(m.n_rows());
        std::iota(idx_.begin(), idx_.end(), 0);
        Tally root;
        for (int i : idx_) root.add(labels_[i], p_.class_weights);
        total_weight_ = root.weight();
        grow(0, static_cast<int>(idx_.size()), root, 0);
    }

private:
    static int majority(const Tally& t) { return t.weighted[1] > t.weighted[0] ? 1 : 0; }

    int grow(int begin, int end, const Tally& node, int depth) {
        model_.depth = std::max(model_.depth, depth);
        const int id = static_cast<int>(model_.nodes.size());
        model_.nodes.push_back(TreeNode{});
        model_.nodes[id].klass = majority(node);
        model_.nodes[id].counts = {static_cast<double>(node.raw[0]), static_cast<double>(node.raw[1])};

        if (node.pure() || end - begin < 2 * p_.min_leaf ||
            (p_.max_depth > 0 && depth >= p_.max_depth))
            return id;

        // exhaustive best split: features ascending, thresholds ascending,
        // strictly-better score wins — i.e. ties go to the lowest term
        // index, then the lowest threshold. Zero-gain splits are allowed on
        // impure nodes (required e.g. for XOR-style label structure).
        int best_feature = -1;
        double best_threshold = 0.0, best_gain = -1.0;
        std::vector<std::pair<double, int>> column(static_cast<std::size_t>(end - begin));
        for (std::size_t f = 0; f < m_.n_terms(); ++f) {
            for (int r = begin; r < end; ++r) {
                const int row = idx_[r];
                column[static_cast<std::size_t>(r - begin)] = {
                    m_.at(static_cast<std::size_t>(row), static_cast<int>(f)), labels_[row]};
            }
            std::sort(column.begin(), column.end());
            Tally left, right = node;
            for (std::size_t i = 0; i + 1 < column.size(); ++i) {
                left.add(column[i].second, p_.class_weights);
                right.remove(column[i].second, p_.class_weights);
                if (column[i].first == column[i + 1].first) continue;  // not a boundary
                if (left.count() < p_.min_leaf || right.count() < p_.min_leaf) continue;
                const double gain = split_gain(node, left, right, total_weight_);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_feature = static_cast<int>(f);
                    best_threshold = column[i].first;
                }
            }
        }
        if (best_feature < 0) return id;

        auto mid_it = std::stable_partition(idx_.begin() + begin, idx_.begin() + end, [&](int row) {
            return m_.at(static_cast<std::size_t>(row), best_feature) <= best_threshold;
        });
        const int mid = static_cast<int>(mid_it - idx_.begin());
        Tally left, right;
        for (int r = begin; r < mid; ++r) left.add(labels_[idx_[r]], p_.class_weights);
        for (int r = mid; r < end; ++r) right.add(labels_[idx_[r]], p_.class_weights);

        model_.nodes[id].term = best_feature;
        model_.nodes[id].threshold = best_threshold;
        const int l = grow(begin, mid, left, depth + 1);
        const int r = grow(mid, end, right, depth + 1);
        model_.nodes[id].left = l;
        model_.nodes[id].right = r;
        return id;
    }

    const TermMatrix& m_;
    const std::vector<int>& labels_;
    const TreeParams& p_;
    DecisionTreeModel& model_;
    std::vector<int> idx_;
    double total_weight_ = 0;
};

}  // namespace detail

/// Greedy CART on term counts: best (term, threshold) split by weighted Gini
/// decrease; stops at purity, max_depth, or min_leaf. Deterministic.
inline DecisionTreeModel train_decision_tree(const TermMatrix& m, const std::vector<int>& labels,
                                             const TreeParams& params = {}) {
    if (m.n_rows() < 2) throw std::invalid_argument("train_decision_tree: need at least 2 rows");
    if (labels.size() != m.n_rows())
        throw std::invalid_argument("train_decision_tree: labels not parallel to rows");
    DecisionTreeModel model;
    model.vocabulary = m.vocabulary;
    model.params = params;
    detail::CartGrower(m, labels, params, model);
    return model;
}

struct PathStep {
    int node = 0;
    int term = -1;          // -1 on the leaf step
    double threshold = 0;
    bool went_right = false;
};

struct Classification {
    int label = 0;  // 1 = insider
    std::vector<PathStep> path;  // every visited node, root to leaf inclusive
};

/// Classifies a dense vector over the model's vocabulary and reports the
/// decision path taken. Throws on a vocabulary-size mismatch.
inline Classification classify_case(const DecisionTreeModel& model, std::span<const double> vec) {
    if (vec.size() != model.vocabulary.size())
        throw std::invalid_argument("classify_case: vector length " + std::to_string(vec.size()) +
                                    " does not match vocabulary size " +
                                    std::to_string(model.vocabulary.size()));
    if (model.nodes.empty()) throw std::invalid_argument("classify_case: untrained model");

    Classification out;
    int cur = 0;
    while (true) {
        const TreeNode& n = model.nodes[static_cast<std::size_t>(cur)];
        if (n.is_leaf()) {
            out.path.push_back(PathStep{cur, -1, 0, false});
            out.label = n.klass;
            return out;
        }
        const bool right = vec[static_cast<std::size_t>(n.term)] > n.threshold;
        out.path.push_back(PathStep{cur, n.term, n.threshold, right});
        cur = right ? n.right : n.left;
    }
}

/// Graphviz DOT export. Insider-majority nodes fill lightblue, non-insider
/// sandybrown; when a highlight vector is given, the nodes on its decision
/// path fill white. Edges carry the branch condition.
inline std::string export_tree_dot(const DecisionTreeModel& model,
                                   const std::vector<double>* highlight = nullptr) {
    if (model.nodes.empty()) throw std::invalid_argument("export_tree_dot: untrained model");
    std::vector<bool> on_path(model.nodes.size(), false);
    if (highlight) {
        const auto cls = classify_case(model, *highlight);
        for (const auto& step : cls.path) on_path[static_cast<std::size_t>(step.node)] = true;
    }

    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        return out;
    };

    std::ostringstream dot;
    dot << "digraph decision_tree {\n";
    dot << "  node [shape=box, style=\"filled,rounded\", fontname=\"Helvetica\"];\n";
    for (std::size_t i = 0; i < model.nodes.size(); ++i) {
        const TreeNode& n = model.nodes[i];
        std::string label;
        if (n.is_leaf()) {
            label = n.klass == 1 ? "insider" : "non-insider";
        } else {
            label = escape(model.vocabulary[static_cast<std::size_t>(n.term)]) + " ≤ " +
                    format_double(n.threshold);
        }
        label += "\\n[" + format_double(n.counts[0]) + ", " + format_double(n.counts[1]) + "]";
        const char* fill = on_path[i] ? "white" : (n.klass == 1 ? "lightblue" : "sandybrown");
        dot << "  n" << i << " [label=\"" << label << "\", fillcolor=\"" << fill << "\"];\n";
    }
    for (std::size_t i = 0; i < model.nodes.size(); ++i) {
        const TreeNode& n = model.nodes[i];
        if (n.is_leaf()) continue;
        dot << "  n" << i << " -> n" << n.left << " [label=\"≤ " << format_double(n.threshold)
            << "\"];\n";
        dot << "  n" << i << " -> n" << n.right << " [label=\"> " << format_double(n.threshold)
            << "\"];\n";
    }
    dot << "}\n";
    return dot.str();
}

inline nlohmann::json tree_to_json(const DecisionTreeModel& model) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : model.nodes) {
        nodes.push_back({{"term", n.term},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right},
                         {"class", n.klass},
                         {"counts", n.counts}});
    }
    return nlohmann::json{{"vocabulary", model.vocabulary},
                          {"params",
                           {{"max_depth", model.params.max_depth},
                            {"min_leaf", model.params.min_leaf},
                            {"class_weights", model.params.class_weights},
                            {"seed", model.params.seed}}},
                          {"depth", model.depth},
                          {"nodes", nodes}};
}

inline DecisionTreeModel tree_from_json(const nlohmann::json& j) {
    DecisionTreeModel m;
    m.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    m.params.max_depth = j.at("params").at("max_depth").get<int>();
    m.params.min_leaf = j.at("params").at("min_leaf").get<int>();
    m.params.class_weights = j.at("params").at("class_weights").get<ClassWeights>();
    m.params.seed = j.at("params").at("seed").get<std::uint64_t>();
    m.depth = j.at("depth").get<int>();
    for (const auto& nj : j.at("nodes")) {
        TreeNode n;
        n.term = nj.at("term").get<int>();
        n.threshold = nj.at("threshold").get<double>();
        n.left = nj.at("left").get<int>();
        n.right = nj.at("right").get<int>();
        n.klass = nj.at("class").get<int>();
        n.counts = nj.at("counts").get<std::array<double, 2>>();
        m.nodes.push_back(n);
    }
    return m;
}

}  // namespace anomalous::text
