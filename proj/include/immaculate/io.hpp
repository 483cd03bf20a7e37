#pragma once

// Text and JSON formats.
//
// Tableau text: one diagram row per line, entries separated by single spaces,
// every line newline-terminated. A pair is the P block, one blank line, then
// the J block. JSON: {"shape": [...], "rows": [[...], ...]} for a tableau and
// {"P": {...}, "J": {...}} for a pair.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bijection.hpp"
#include "composition.hpp"
#include "error.hpp"
#include "tableau.hpp"
#include "verify.hpp"

namespace immaculate {

using json = nlohmann::json;

// ---------------------------------------------------------------- text

inline std::string format_rows(const std::vector<std::vector<int>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

inline std::string format_text(const Filling& t) { return format_rows(t.rows()); }
inline std::string format_text(const HookTableau& j) { return format_rows(j.rows()); }
inline std::string format_text(const PairPJ& p) { return format_text(p.P.filling()) + "\n" + format_text(p.J); }

/// Rows with the entries on `marked` cells bracketed, e.g. "[1] 5 8 9".
inline std::string format_marked(const Filling& t, const Path& marked) {
    std::string out;
    const Composition& shape = t.shape();
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            if (j > 1) out += ' ';
            const Cell c{i, j};
            const bool on_path = std::find(marked.begin(), marked.end(), c) != marked.end();
            const std::string v = std::to_string(t.at(c));
            out += on_path ? "[" + v + "]" : v;
        }
        out += '\n';
    }
    return out;
}

/// Hook length of every cell laid out on the diagram.
inline std::string format_hook_grid(const Composition& shape) {
    return format_rows(Filling(shape, [&] {
                           std::vector<std::vector<int>> rows;
                           for (int i = 1; i <= shape.length(); ++i) {
                               rows.emplace_back();
                               for (int j = 1; j <= shape.part(i); ++j) rows.back().push_back(hook_length(shape, {i, j}));
                           }
                           return rows;
                       }())
                           .rows());
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

inline bool blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

inline std::vector<int> parse_row(std::string_view line) {
    std::vector<int> row;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw parse_error("bad tableau entry '" + token + "'");
        }
        if (used != token.size()) throw parse_error("bad tableau entry '" + token + "'");
        if (v < 1 || v >= infinity) throw parse_error("tableau entries must be positive, got '" + token + "'");
        row.push_back(static_cast<int>(v));
    }
    return row;
}

/// Splits text into blocks of non-blank lines.
inline std::vector<std::vector<std::vector<int>>> parse_blocks(std::string_view text) {
    std::vector<std::vector<std::vector<int>>> blocks;
    bool in_block = false;
    for (auto line : split_lines(text)) {
        if (blank(line)) {
            in_block = false;
            continue;
        }
        if (!in_block) blocks.emplace_back();
        in_block = true;
        blocks.back().push_back(parse_row(line));
    }
    return blocks;
}

inline bool looks_like_json(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[');
}

}  // namespace detail

// ---------------------------------------------------------------- json

inline json to_json(const Composition& shape) { return shape.parts(); }
inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }

inline json to_json(const Path& path) {
    json out = json::array();
    for (const Cell& c : path) out.push_back(to_json(c));
    return out;
}

inline json to_json(const Filling& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }
inline json to_json(const HookTableau& j) { return to_json(j.as_filling()); }
inline json to_json(const PairPJ& p) { return {{"P", to_json(p.P.filling())}, {"J", to_json(p.J)}}; }

inline json to_json(const PsiTrace& trace) {
    json out = json::array();
    for (std::size_t k = 0; k < trace.size(); ++k)
        out.push_back({{"step", k + 1}, {"P", to_json(trace[k].P)}, {"J", to_json(trace[k].J)}, {"path", to_json(trace[k].path)}});
    return out;
}

inline json to_json(const PhiTrace& trace) {
    json out = json::array();
    for (std::size_t k = 0; k < trace.size(); ++k) {
        json state = {{"step", k + 1}, {"T", to_json(trace[k].T)}, {"S", to_json(trace[k].S)}, {"path", to_json(trace[k].path)}};
        state["entry"] = trace[k].entry == 0 ? json(nullptr) : json(trace[k].entry);
        out.push_back(std::move(state));
    }
    return out;
}

inline std::string to_string(const bigint& v) { return v.str(); }

inline json to_json(const Failure& f) { return {{"input", f.input}, {"stage", f.stage}, {"detail", f.detail}}; }

/// Counts are emitted as decimal strings: they exceed 64 bits for large n.
inline json to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.roundtrip_failures) failures.push_back(to_json(f));
    json assertions = json::array();
    for (const auto& f : r.assertion_failures) assertions.push_back(to_json(f));
    return {
        {"shape", r.shape.parts()},
        {"mode", r.mode == VerifyMode::exhaustive ? "exhaustive" : "sampled"},
        {"passed", r.passed()},
        {"count_formula", r.count_formula.str()},
        {"count_bruteforce", r.count_bruteforce ? json(r.count_bruteforce->str()) : json(nullptr)},
        {"count_recursive", r.count_recursive.str()},
        {"x_size", r.x_size.str()},
        {"y_size", r.y_size.str()},
        {"fillings_checked", r.fillings_checked},
        {"pairs_checked", r.pairs_checked},
        {"roundtrip_failure_count", r.roundtrip_failure_count},
        {"assertion_failure_count", r.assertion_failure_count},
        {"roundtrip_failures", std::move(failures)},
        {"assertion_failures", std::move(assertions)},
    };
}

inline Filling filling_from_json(const json& j) {
    try {
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        if (j.contains("shape")) return Filling(Composition(j.at("shape").get<std::vector<int>>()), rows);
        return Filling(rows);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad tableau JSON: ") + e.what());
    }
}

inline PairPJ pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("J")) throw parse_error("pair JSON needs fields P and J");
    return PairPJ(StandardImmaculateTableau(filling_from_json(j.at("P"))), HookTableau(filling_from_json(j.at("J"))));
}

// ---------------------------------------------------------------- parsing

/// A single tableau in text or JSON form.
inline Filling parse_filling(std::string_view text) {
    if (detail::looks_like_json(text)) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("bad JSON: ") + e.what());
        }
        return filling_from_json(j);
    }
    auto blocks = detail::parse_blocks(text);
    if (blocks.size() != 1)
        throw parse_error("expected one tableau block, found " + std::to_string(blocks.size()));
    return Filling(blocks.front());
}

/// A (P, J) pair in text or JSON form.
inline PairPJ parse_pair(std::string_view text) {
    if (detail::looks_like_json(text)) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw parse_error(std::string("bad JSON: ") + e.what());
        }
        return pair_from_json(j);
    }
    auto blocks = detail::parse_blocks(text);
    if (blocks.size() != 2)
        throw parse_error("expected two tableau blocks (P, then J) separated by a blank line, found " +
                          std::to_string(blocks.size()));
    Filling p(blocks[0]);
    Filling j(blocks[1]);
    if (p.shape() != j.shape())
        throw invalid_input("P has shape " + p.shape().str() + " but J has shape " + j.shape().str());
    return PairPJ(StandardImmaculateTableau(std::move(p)), HookTableau(j));
}

}  // namespace immaculate
