// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalous/corpus.hpp"
#include "anomalous/tokenizer.hpp"

namespace anomalous::text {

/// Cases-by-terms matrix, sparse rows over a sorted vocabulary. Cell values
/// are raw term counts until apply_tfidf re-weights them.
struct TermMatrix {
    std::vector<std::string> vocabulary;  // sorted, no duplicates
    // row i: (column, value) pairs sorted by column
    std::vector<std::vector<std::pair<int, double>>> rows;
    std::vector<int> labels;  // parallel to rows when present (1 = insider), else empty

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_terms() const { return vocabulary.size(); }

    double at(std::size_t row, int col) const {
        const auto& r = rows[row];
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& p, int c) { return p.first < c; });
        return (it != r.end() && it->first == col) ? it->second : 0.0;
    }

    /// Dense copy of one row, over the full vocabulary.
    std::vector<double> dense_row(std::size_t row) const {
        std::vector<double> out(n_terms(), 0.0);
        for (const auto& [col, v] : rows[row]) out[static_cast<std::size_t>(col)] = v;
        return out;
    }

    /// Dense copy of one column across all rows.
    std::vector<double> dense_column(int col) const {
        std::vector<double> out(n_rows(), 0.0);
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = at(i, col);
        return out;
    }
};

/// Builds the matrix from pre-tokenized documents. The vocabulary is the
/// sorted union of all tokens.
inline TermMatrix build_term_matrix(const std::vector<std::vector<std::string>>& token_rows,
                                    std::vector<int> labels = {}) {
    if (token_rows.empty()) throw std::invalid_argument("build_term_matrix: no documents");
    if (!labels.empty() && labels.size() != token_rows.size())
        throw std::invalid_argument("build_term_matrix: labels not parallel to rows");

    std::map<std::string, int> vocab_index;
    for (const auto& doc : token_rows)
        for (const auto& tok : doc) vocab_index.emplace(tok, 0);
    TermMatrix m;
    m.vocabulary.reserve(vocab_index.size());
    for (auto& [term, idx] : vocab_index) {
        idx = static_cast<int>(m.vocabulary.size());
        m.vocabulary.push_back(term);
    }

    m.rows.reserve(token_rows.size());
    for (const auto& doc : token_rows) {
        std::map<int, double> counts;
        for (const auto& tok : doc) counts[vocab_index.at(tok)] += 1.0;
        m.rows.emplace_back(counts.begin(), counts.end());
    }
    m.labels = std::move(labels);
    return m;
}

/// Builds the matrix from labeled cases; each document is the tokenized
/// title plus body.
inline TermMatrix build_term_matrix(const std::vector<corpus::LabeledCase>& cases) {
    if (cases.empty()) throw std::invalid_argument("build_term_matrix: no documents");
    std::vector<std::vector<std::string>> token_rows;
    std::vector<int> labels;
    token_rows.reserve(cases.size());
    for (const auto& lc : cases) {
        auto toks = tokenize(lc.record.title);
        auto body = tokenize(lc.record.body);
        toks.insert(toks.end(), body.begin(), body.end());
        token_rows.push_back(std::move(toks));
        labels.push_back(lc.label == corpus::Label::insider ? 1 : 0);
    }
    return build_term_matrix(token_rows, std::move(labels));
}

/// TF-IDF re-weighting: cell = tf * ln(N / df), with df counted over rows
/// with a positive entry. No smoothing. Rows are processed in chunks so the
/// working set beyond the matrix itself stays bounded.
inline TermMatrix apply_tfidf(const TermMatrix& m, std::size_t chunk_rows = 4096) {
    if (m.n_rows() == 0) throw std::invalid_argument("apply_tfidf: empty matrix");
    std::vector<std::size_t> df(m.n_terms(), 0);
    for (const auto& row : m.rows)
        for (const auto& [col, v] : row)
            if (v > 0) ++df[static_cast<std::size_t>(col)];

    const double n = static_cast<double>(m.n_rows());
    TermMatrix out;
    out.vocabulary = m.vocabulary;
    out.labels = m.labels;
    out.rows.resize(m.n_rows());
    for (std::size_t begin = 0; begin < m.n_rows(); begin += chunk_rows) {
        const std::size_t end = std::min(m.n_rows(), begin + chunk_rows);
        for (std::size_t i = begin; i < end; ++i) {
            auto row = m.rows[i];
            for (auto& [col, v] : row)
                v *= std::log(n / static_cast<double>(df[static_cast<std::size_t>(col)]));
            out.rows[i] = std::move(row);
        }
    }
    return out;
}

/// Top terms by total TF-IDF mass, as a diagnostic listing.
inline std::vector<std::pair<std::string, double>> top_tfidf_terms(const TermMatrix& weighted,
                                                                   std::size_t k) {
    std::vector<double> mass(weighted.n_terms(), 0.0);
    for (const auto& row : weighted.rows)
        for (const auto& [col, v] : row) mass[static_cast<std::size_t>(col)] += v;
    std::vector<int> order(weighted.n_terms());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return mass[a] > mass[b]; });
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < std::min(k, order.size()); ++i)
        out.emplace_back(weighted.vocabulary[order[i]], mass[order[i]]);
    return out;
}

}  // namespace anomalous::text
