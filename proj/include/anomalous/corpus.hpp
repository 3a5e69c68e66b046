// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anomalous/common.hpp"
#include "anomalous/date.hpp"
#include "anomalous/tokenizer.hpp"

namespace anomalous::corpus {

/// One litigation release, as loaded from a plain-text file: the first
/// nonblank line is the title, everything after it is the body.
struct CaseRecord {
    std::string id;     // filename stem; unique within a corpus
    std::string title;
    std::string body;   // may be empty
    std::optional<Date> release_date;  // not carried by the on-disk format
};

enum class Label { insider, non_insider };

inline std::string to_string(Label l) { return l == Label::insider ? "insider" : "non_insider"; }

inline Label label_from_string(std::string_view s) {
    if (s == "insider") return Label::insider;
    if (s == "non_insider") return Label::non_insider;
    throw std::runtime_error("unknown label: " + std::string(s));
}

struct LabeledCase {
    CaseRecord record;
    bool in_title = false;
    bool in_body = false;
    Label label = Label::non_insider;
};

struct LabelStats {
    std::size_t total = 0;
    std::size_t title_hits = 0;
    std::size_t body_hits = 0;
    std::size_t either_hits = 0;
    std::size_t both_hits = 0;
};

/// Which keyword flag combination makes a case an insider case.
enum class LabelRule { title, body, either, both };

inline std::string to_string(LabelRule r) {
    switch (r) {
        case LabelRule::title: return "title";
        case LabelRule::body: return "body";
        case LabelRule::either: return "either";
        case LabelRule::both: return "both";
    }
    return "either";
}

inline LabelRule label_rule_from_string(std::string_view s) {
    if (s == "title") return LabelRule::title;
    if (s == "body") return LabelRule::body;
    if (s == "either") return LabelRule::either;
    if (s == "both") return LabelRule::both;
    throw std::runtime_error("unknown label rule: " + std::string(s));
}

struct CaseSet {
    std::vector<CaseRecord> cases;       // ordered lexicographically by id
    std::vector<std::string> warnings;   // skipped files, one message each
};

/// Loads every `.txt` file in `dir` as one case. Unreadable or empty files
/// are skipped with a warning record; an unreadable directory throws.
/// Deterministic: cases come back sorted by id.
inline CaseSet load_cases(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::exists(dir) || !fs::is_directory(dir))
        throw std::runtime_error("corpus directory not readable: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.stem() < b.stem(); });

    CaseSet set;
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            set.warnings.push_back("unreadable file skipped: " + file.string());
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();

        // first nonblank line = title, remainder = body
        std::string title, body;
        std::size_t pos = 0;
        while (pos < content.size()) {
            std::size_t eol = content.find('\n', pos);
            if (eol == std::string::npos) eol = content.size();
            const std::string_view line = trim(std::string_view(content).substr(pos, eol - pos));
            pos = eol + (eol < content.size() ? 1 : 0);
            if (!line.empty()) {
                title = std::string(line);
                break;
            }
        }
        if (title.empty()) {
            set.warnings.push_back("empty file skipped: " + file.string());
            continue;
        }
        body = pos < content.size() ? content.substr(pos) : std::string{};
        while (!body.empty() && (body.front() == '\n' || body.front() == '\r')) body.erase(0, 1);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();

        set.cases.push_back(CaseRecord{file.stem().string(), std::move(title), std::move(body), std::nullopt});
    }
    return set;
}

namespace detail {
inline bool contains_token(const std::string& text, const std::string& keyword_lower, bool stemming) {
    for (const auto& tok : text::tokenize(text)) {
        if (tok == keyword_lower) return true;
        if (stemming && text::stem(tok) == keyword_lower) return true;
    }
    return false;
}
}  // namespace detail

/// Case-insensitive whole-token keyword labeling. The rule selects which
/// flag combination counts as insider; default is title-or-body.
inline std::vector<LabeledCase> label_cases(const std::vector<CaseRecord>& cases,
                                            const std::string& keyword,
                                            LabelRule rule = LabelRule::either,
                                            bool stemming = false) {
    if (keyword.empty()) throw std::invalid_argument("label_cases: keyword must be nonempty");
    const std::string key = lower_ascii(keyword);
    std::vector<LabeledCase> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
        LabeledCase lc;
        lc.record = c;
        lc.in_title = detail::contains_token(c.title, key, stemming);
        lc.in_body = detail::contains_token(c.body, key, stemming);
        bool hit = false;
        switch (rule) {
            case LabelRule::title: hit = lc.in_title; break;
            case LabelRule::body: hit = lc.in_body; break;
            case LabelRule::either: hit = lc.in_title || lc.in_body; break;
            case LabelRule::both: hit = lc.in_title && lc.in_body; break;
        }
        lc.label = hit ? Label::insider : Label::non_insider;
        out.push_back(std::move(lc));
    }
    return out;
}

inline LabelStats corpus_stats(const std::vector<LabeledCase>& labeled) {
    LabelStats s;
    s.total = labeled.size();
    for (const auto& lc : labeled) {
        if (lc.in_title) ++s.title_hits;
        if (lc.in_body) ++s.body_hits;
        if (lc.in_title || lc.in_body) ++s.either_hits;
        if (lc.in_title && lc.in_body) ++s.both_hits;
    }
    return s;
}

inline nlohmann::json stats_to_json(const LabelStats& s) {
    return nlohmann::json{{"total", s.total},
                          {"title_hits", s.title_hits},
                          {"body_hits", s.body_hits},
                          {"either_hits", s.either_hits},
                          {"both_hits", s.both_hits}};
}

/// JSON Lines persistence: one object per case with fields
/// id,title,body,in_title,in_body,label.
inline void write_cases_jsonl(const std::filesystem::path& path,
                              const std::vector<LabeledCase>& labeled) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& lc : labeled) {
        nlohmann::json j{{"id", lc.record.id},       {"title", lc.record.title},
                         {"body", lc.record.body},   {"in_title", lc.in_title},
                         {"in_body", lc.in_body},    {"label", to_string(lc.label)}};
        out << j.dump() << '\n';
    }
}

inline std::vector<LabeledCase> read_cases_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::vector<LabeledCase> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto j = nlohmann::json::parse(line);
        LabeledCase lc;
        lc.record.id = j.at("id").get<std::string>();
        lc.record.title = j.at("title").get<std::string>();
        lc.record.body = j.at("body").get<std::string>();
        lc.in_title = j.at("in_title").get<bool>();
        lc.in_body = j.at("in_body").get<bool>();
        lc.label = label_from_string(j.at("label").get<std::string>());
        out.push_back(std::move(lc));
    }
    return out;
}

}  // namespace anomalous::corpus
