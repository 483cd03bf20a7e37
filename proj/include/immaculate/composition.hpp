#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace immaculate {

using bigint = boost::multiprecision::cpp_int;

/// A cell of a diagram, 1-based: row counted top to bottom, column left to right.
struct Cell {
    int row = 1;
    int col = 1;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    /// Row-major ordering, for containers only. The combinatorial order is cell_before().
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

/// Strict part of the reverse lexicographic cell order: larger column first,
/// then larger row first within a column.
constexpr bool cell_before(const Cell& a, const Cell& b) noexcept {
    return a.col > b.col || (a.col == b.col && a.row > b.row);
}

/// A composition (α_1, ..., α_k) of n: an ordered tuple of positive parts.
///
/// Cells are addressed by 1-based Cell values in the public interface. Each
/// cell also has a 0-based row-major slot (see slot()) that fillings use for
/// storage.
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw invalid_input("composition must have at least one part");
        offsets_.reserve(parts_.size() + 1);
        offsets_.push_back(0);
        for (int p : parts_) {
            if (p < 1) throw invalid_input("composition parts must be positive, got " + std::to_string(p));
            offsets_.push_back(offsets_.back() + static_cast<std::size_t>(p));
        }
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// n, the number of cells.
    int size() const noexcept { return static_cast<int>(offsets_.back()); }
    /// ℓ(α), the number of rows.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// α_row, 1-based.
    int part(int row) const { return parts_.at(static_cast<std::size_t>(row - 1)); }

    bool contains(const Cell& c) const noexcept {
        return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= parts_[static_cast<std::size_t>(c.row - 1)];
    }

    void require(const Cell& c) const {
        if (!contains(c)) throw invalid_input("cell " + to_string(c) + " is not in the diagram of " + str());
    }

    /// 0-based row-major storage index of a cell in the diagram.
    std::size_t slot(const Cell& c) const noexcept {
        return offsets_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
    }

    /// Number of cells in rows row..ℓ(α).
    int cells_from_row(int row) const noexcept {
        return static_cast<int>(offsets_.back() - offsets_[static_cast<std::size_t>(row - 1)]);
    }

    /// α_from + ... + α_{to-1}.
    int cells_between_rows(int from, int to) const noexcept {
        return static_cast<int>(offsets_[static_cast<std::size_t>(to - 1)] - offsets_[static_cast<std::size_t>(from - 1)]);
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Composition& a, const Composition& b) noexcept { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Composition& a, const Composition& b) noexcept { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<std::size_t> offsets_;
};

/// Parses "4,1,2,3" or "(4,1,2,3)". Whitespace around tokens is ignored.
inline Composition parse_composition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw parse_error("unbalanced parenthesis in composition '" + std::string(text) + "'");
        text = trim(text.substr(1, text.size() - 2));
    }
    if (text.empty()) throw parse_error("empty composition");

    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw parse_error("bad composition part '" + std::string(token) + "'");
        if (value < 1) throw parse_error("composition parts must be positive, got " + std::to_string(value));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Composition(std::move(parts));
}

/// All cells in row-major order.
inline std::vector<Cell> diagram_cells(const Composition& shape) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(shape.size()));
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i, j});
    return cells;
}

/// The cells listed as c_1 < c_2 < ... < c_n.
class CellOrder {
public:
    explicit CellOrder(const Composition& shape) : cells_(diagram_cells(shape)), rank_(cells_.size()) {
        std::sort(cells_.begin(), cells_.end(), cell_before);
        for (std::size_t k = 0; k < cells_.size(); ++k) rank_[shape.slot(cells_[k])] = static_cast<int>(k + 1);
    }

    int size() const noexcept { return static_cast<int>(cells_.size()); }
    /// c_k for 1 ≤ k ≤ n.
    const Cell& operator[](int k) const { return cells_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    /// k such that c_k is the cell stored at the given row-major slot.
    int rank_of_slot(std::size_t slot) const { return rank_.at(slot); }

private:
    std::vector<Cell> cells_;
    std::vector<int> rank_;
};

inline CellOrder cell_order(const Composition& shape) { return CellOrder(shape); }

/// Hook of c, enumerated row-major: for c=(i,j) with j>1 the rest of row i;
/// for j=1 every cell of rows i..ℓ(α), each row left to right.
inline std::vector<Cell> hook_cells(const Composition& shape, const Cell& c) {
    shape.require(c);
    std::vector<Cell> hook;
    if (c.col > 1) {
        for (int j = c.col; j <= shape.part(c.row); ++j) hook.push_back({c.row, j});
    } else {
        for (int i = c.row; i <= shape.length(); ++i)
            for (int j = 1; j <= shape.part(i); ++j) hook.push_back({i, j});
    }
    return hook;
}

inline int hook_length(const Composition& shape, const Cell& c) {
    shape.require(c);
    return c.col > 1 ? shape.part(c.row) - c.col + 1 : shape.cells_from_row(c.row);
}

/// Hook lengths in row-major slot order.
inline std::vector<int> hook_lengths(const Composition& shape) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(shape.size()));
    for (const Cell& c : diagram_cells(shape)) out.push_back(hook_length(shape, c));
    return out;
}

inline bigint hook_product(const Composition& shape) {
    bigint product = 1;
    for (int h : hook_lengths(shape)) product *= h;
    return product;
}

inline bigint factorial(int n) {
    bigint result = 1;
    for (int k = 2; k <= n; ++k) result *= k;
    return result;
}

/// f^α = n! / ∏ h_c, exact. Throws internal_error if the division leaves a
/// remainder.
inline bigint count_formula(const Composition& shape) {
    bigint numerator = factorial(shape.size());
    bigint denominator = hook_product(shape);
    bigint quotient, remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    detail::check_internal(remainder == 0, "hook product does not divide n! for shape " + shape.str());
    return quotient;
}

}  // namespace immaculate
