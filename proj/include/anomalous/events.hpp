// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 anomalous contributors
#pragma once

#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalous/corpus.hpp"
#include "anomalous/csv.hpp"
#include "anomalous/date.hpp"

namespace anomalous::corpus {

/// Per-case event attributes anchoring a pattern window.
struct EventRecord {
    std::string case_id;
    std::string company;
    std::optional<std::string> ticker;
    Date learn_date;                     // when the insider learned the information
    std::optional<Date> public_date;     // when it became public
    std::optional<double> illicit_gain;  // currency amount
};

/// Manual-override table keyed by case id. The CSV schema is
/// `case_id,company,ticker,learn_date,public_date,illicit_gain` with
/// ISO-8601 dates; an entry here always wins over text extraction.
class EventOverrideTable {
public:
    EventOverrideTable() = default;

    static EventOverrideTable load_csv(const std::filesystem::path& path) {
        const CsvTable table = read_csv(path);
        const int c_id = table.column("case_id");
        const int c_company = table.column("company");
        const int c_ticker = table.column("ticker");
        const int c_learn = table.column("learn_date");
        const int c_public = table.column("public_date");
        const int c_gain = table.column("illicit_gain");
        if (c_id < 0 || c_company < 0 || c_ticker < 0 || c_learn < 0 || c_public < 0 || c_gain < 0)
            throw std::runtime_error("override table " + path.string() +
                                     ": header must be case_id,company,ticker,learn_date,public_date,illicit_gain");

        EventOverrideTable t;
        std::size_t lineno = 1;
        for (const auto& row : table.rows) {
            ++lineno;
            const auto bad = [&](const std::string& what) {
                return std::runtime_error("override table " + path.string() + " row " +
                                          std::to_string(lineno) + ": " + what);
            };
            if (row.size() != table.header.size()) throw bad("wrong field count");
            EventRecord e;
            e.case_id = row[c_id];
            e.company = row[c_company];
            if (e.case_id.empty() || e.company.empty()) throw bad("case_id and company required");
            if (!row[c_ticker].empty()) e.ticker = row[c_ticker];
            const auto learn = Date::parse_iso(row[c_learn]);
            if (!learn) throw bad("learn_date is not an ISO date: " + row[c_learn]);
            e.learn_date = *learn;
            if (!row[c_public].empty()) {
                const auto pub = Date::parse_iso(row[c_public]);
                if (!pub) throw bad("public_date is not an ISO date: " + row[c_public]);
                if (*pub < e.learn_date) throw bad("public_date precedes learn_date");
                e.public_date = *pub;
            }
            if (!row[c_gain].empty()) {
                double g;
                if (!parse_double(row[c_gain], g)) throw bad("illicit_gain is not a number");
                e.illicit_gain = g;
            }
            if (!t.by_case_.emplace(e.case_id, std::move(e)).second)
                throw bad("duplicate case_id " + row[c_id]);
        }
        return t;
    }

    const EventRecord* find(const std::string& case_id) const {
        auto it = by_case_.find(case_id);
        return it == by_case_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return by_case_.size(); }

private:
    std::map<std::string, EventRecord> by_case_;
};

namespace detail {

// "January 15, 2016" (comma optional) or "2016-01-15"
inline const std::regex& month_date_re() {
    static const std::regex re(
        R"((January|February|March|April|May|June|July|August|September|October|November|December)\s+(\d{1,2}),?\s+(\d{4}))",
        std::regex::icase);
    return re;
}
inline const std::regex& iso_date_re() {
    static const std::regex re(R"((\d{4})-(\d{2})-(\d{2}))");
    return re;
}
// Capitalized phrase ending in a corporate suffix, e.g. "Acme Corp",
// "Spectrum Pharmaceuticals Inc".
inline const std::regex& company_re() {
    static const std::regex re(
        R"(((?:[A-Z][A-Za-z&.'-]*\s+)*[A-Z][A-Za-z&.'-]*\s+(?:Corp(?:oration)?|Inc(?:orporated)?|Co(?:mpany)?|Ltd|LLC|LLP|plc|Pharmaceuticals|Holdings|Group)\.?)\b)");
    return re;
}
// Fallback: capitalized phrase right after the word "that".
inline const std::regex& company_after_that_re() {
    static const std::regex re(R"(\bthat\s+((?:[A-Z][A-Za-z&.'-]*)(?:\s+[A-Z][A-Za-z&.'-]*)*))");
    return re;
}

struct FoundDate {
    Date date;
    std::size_t pos = 0;
};

inline std::vector<FoundDate> find_dates(const std::string& text) {
    std::vector<FoundDate> found;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), month_date_re());
         it != std::sregex_iterator(); ++it) {
        const int m = month_from_name((*it)[1].str());
        long long d = 0, y = 0;
        parse_long((*it)[2].str(), d);
        parse_long((*it)[3].str(), y);
        Date date{static_cast<int>(y), m, static_cast<int>(d)};
        if (m != 0 && date.valid())
            found.push_back({date, static_cast<std::size_t>(it->position())});
    }
    for (auto it = std::sregex_iterator(text.begin(), text.end(), iso_date_re());
         it != std::sregex_iterator(); ++it) {
        if (auto date = Date::parse_iso((*it)[0].str()))
            found.push_back({*date, static_cast<std::size_t>(it->position())});
    }
    std::sort(found.begin(), found.end(),
              [](const FoundDate& a, const FoundDate& b) { return a.pos < b.pos; });
    return found;
}

inline bool preceded_by(const std::string& text, std::size_t pos, const char* marker,
                        std::size_t span = 48) {
    const std::size_t from = pos > span ? pos - span : 0;
    const std::string window = lower_ascii(std::string_view(text).substr(from, pos - from));
    return window.find(marker) != std::string::npos;
}

}  // namespace detail

/// Best-effort event extraction. The override table wins outright; otherwise
/// the extractor needs both a learn date and a company name from the body,
/// and returns nothing when either is missing.
///
/// Grammar: dates are month-name ("January 15, 2016") or ISO ("2016-01-15")
/// forms; the learn date is the first date preceded by a "learn" stem within
/// 48 characters, falling back to the first date in the body. The company is
/// the first capitalized phrase ending in a corporate suffix, falling back to
/// the capitalized phrase following the word "that". A public date is
/// recognized only when preceded by "public" or "announc" and not earlier
/// than the learn date.
inline std::optional<EventRecord> extract_event_record(const LabeledCase& lc,
                                                       const EventOverrideTable& overrides) {
    if (const EventRecord* o = overrides.find(lc.record.id)) {
        EventRecord e = *o;
        e.case_id = lc.record.id;
        return e;
    }
    if (lc.label != Label::insider) return std::nullopt;

    const std::string& body = lc.record.body;
    const auto dates = detail::find_dates(body);
    if (dates.empty()) return std::nullopt;

    std::optional<Date> learn;
    for (const auto& fd : dates) {
        if (detail::preceded_by(body, fd.pos, "learn")) {
            learn = fd.date;
            break;
        }
    }
    if (!learn) learn = dates.front().date;

    std::string company;
    std::smatch m;
    if (std::regex_search(body, m, detail::company_re())) {
        company = m[1].str();
    } else if (std::regex_search(body, m, detail::company_after_that_re())) {
        company = m[1].str();
    }
    if (company.empty()) return std::nullopt;

    EventRecord e;
    e.case_id = lc.record.id;
    e.company = company;
    e.learn_date = *learn;
    for (const auto& fd : dates) {
        if (fd.date != *learn && !(fd.date < *learn) &&
            (detail::preceded_by(body, fd.pos, "public") ||
             detail::preceded_by(body, fd.pos, "announc"))) {
            e.public_date = fd.date;
            break;
        }
    }
    return e;
}

}  // namespace anomalous::corpus
