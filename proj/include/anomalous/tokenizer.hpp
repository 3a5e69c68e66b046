// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace anomalous::text {

/// Lowercased alphabetic tokens of length >= 2.
///
/// Splits on anything that is not an ASCII letter, except a single hyphen
/// with letters on both sides, so compounds like "non-public" survive as one
/// token. Digits and punctuation never enter a token ("A1 b2" yields
/// nothing: the splits are all shorter than two characters).
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.size() >= 2) tokens.push_back(cur);
        cur.clear();
    };
    const auto is_letter = [](unsigned char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_letter(c)) {
            cur.push_back(static_cast<char>(c | 0x20));
        } else if (c == '-' && !cur.empty() && i + 1 < text.size() &&
                   is_letter(static_cast<unsigned char>(text[i + 1]))) {
            cur.push_back('-');
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

/// Plural-stripping stem used by keyword labeling when stemming is enabled:
/// drops one trailing 's' from tokens of length >= 4 not ending in "ss".
inline std::string stem(std::string_view token) {
    if (token.size() >= 4 && token.back() == 's' && token[token.size() - 2] != 's')
        return std::string(token.substr(0, token.size() - 1));
    return std::string(token);
}

}  // namespace anomalous::text
