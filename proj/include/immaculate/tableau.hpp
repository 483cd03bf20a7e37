#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "composition.hpp"
#include "error.hpp"

namespace immaculate {

/// Value of T_{ij} for a cell outside the diagram. Larger than every entry.
inline constexpr int infinity = std::numeric_limits<int>::max();

/// An assignment of positive integers to the cells of a composition diagram.
/// Entries are stored row-major; the shape is shared between copies.
class Filling {
public:
    Filling(Composition shape, const std::vector<std::vector<int>>& rows)
        : shape_(std::make_shared<const Composition>(std::move(shape))) {
        if (static_cast<int>(rows.size()) != shape_->length())
            throw invalid_input("expected " + std::to_string(shape_->length()) + " rows, got " +
                                std::to_string(rows.size()));
        entries_.reserve(static_cast<std::size_t>(shape_->size()));
        for (int i = 1; i <= shape_->length(); ++i) {
            const auto& row = rows[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(row.size()) != shape_->part(i))
                throw invalid_input("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                    " entries, shape needs " + std::to_string(shape_->part(i)));
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
        validate_entries();
    }

    /// Shape inferred from the row lengths.
    explicit Filling(const std::vector<std::vector<int>>& rows) : Filling(shape_of(rows), rows) {}

    Filling(std::shared_ptr<const Composition> shape, std::vector<int> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != shape_->size())
            throw invalid_input("entry count does not match shape " + shape_->str());
        validate_entries();
    }

    const Composition& shape() const noexcept { return *shape_; }
    const std::shared_ptr<const Composition>& shared_shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_->size(); }

    /// Row-major entries.
    const std::vector<int>& entries() const noexcept { return entries_; }

    int at(const Cell& c) const {
        shape_->require(c);
        return entries_[shape_->slot(c)];
    }

    /// T_c, or `infinity` when c lies outside the diagram.
    int entry_at(const Cell& c) const noexcept {
        return shape_->contains(c) ? entries_[shape_->slot(c)] : infinity;
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        auto it = entries_.begin();
        for (int p : shape_->parts()) {
            out.emplace_back(it, it + p);
            it += p;
        }
        return out;
    }

    /// Cell holding value e, if any.
    std::optional<Cell> find(int e) const {
        auto it = std::find(entries_.begin(), entries_.end(), e);
        if (it == entries_.end()) return std::nullopt;
        auto slot = static_cast<int>(it - entries_.begin());
        for (int i = 1; i <= shape_->length(); ++i) {
            if (slot < shape_->part(i)) return Cell{i, slot + 1};
            slot -= shape_->part(i);
        }
        return std::nullopt;
    }

    friend bool operator==(const Filling& a, const Filling& b) noexcept {
        return a.entries_ == b.entries_ && *a.shape_ == *b.shape_;
    }

private:
    static Composition shape_of(const std::vector<std::vector<int>>& rows) {
        std::vector<int> parts;
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
        return Composition(std::move(parts));
    }

    void validate_entries() const {
        for (int v : entries_)
            if (v < 1 || v == infinity) throw invalid_input("tableau entries must be positive integers, got " + std::to_string(v));
    }

    std::shared_ptr<const Composition> shape_;
    std::vector<int> entries_;
};

/// β with β_m = #entries equal to m, trailing zeros trimmed.
inline std::vector<int> content(const Filling& t) {
    int top = 0;
    for (int v : t.entries()) top = std::max(top, v);
    std::vector<int> beta(static_cast<std::size_t>(top), 0);
    for (int v : t.entries()) ++beta[static_cast<std::size_t>(v - 1)];
    return beta;
}

/// True iff the entries are exactly 1..n, each once.
inline bool has_standard_content(const Filling& t) {
    const auto n = static_cast<std::size_t>(t.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : t.entries()) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

namespace detail {

inline bool stable_unchecked(const Filling& t, const Cell& c) noexcept {
    const int v = t.entry_at(c);
    const int right = t.entry_at({c.row, c.col + 1});
    if (c.col > 1) return v <= right;
    return v < t.entry_at({c.row + 1, c.col}) && v <= right;
}

}  // namespace detail

/// Stability of T_c: T_{ij} ≤ T_{i,j+1}, and additionally T_{i1} < T_{i+1,1}
/// in the first column.
inline bool is_stable(const Filling& t, const Cell& c) {
    t.shape().require(c);
    return detail::stable_unchecked(t, c);
}

inline bool is_immaculate(const Filling& t) {
    for (const Cell& c : diagram_cells(t.shape()))
        if (!detail::stable_unchecked(t, c)) return false;
    const auto beta = content(t);
    return std::none_of(beta.begin(), beta.end(), [](int count) { return count == 0; });
}

inline bool is_standard_immaculate(const Filling& t) {
    return has_standard_content(t) && is_immaculate(t);
}

/// Whether T^{≤c} (inclusive) or T^{<c} is standard. Cells outside the prefix
/// count as ∞. Neighbors to the right and below always precede a cell in the
/// order, so the prefix is closed under the neighbors stability looks at.
inline bool is_prefix_standard(const Filling& t, const CellOrder& order, const Cell& c, bool inclusive) {
    const Composition& shape = t.shape();
    shape.require(c);
    const int last = order.rank_of_slot(shape.slot(c)) - (inclusive ? 0 : 1);
    auto in_prefix = [&](const Cell& b) {
        return shape.contains(b) && order.rank_of_slot(shape.slot(b)) <= last;
    };
    auto value = [&](const Cell& b) { return in_prefix(b) ? t.entry_at(b) : infinity; };
    for (int k = 1; k <= last; ++k) {
        const Cell& b = order[k];
        const int v = t.entry_at(b);
        const int right = value({b.row, b.col + 1});
        if (b.col > 1 ? !(v <= right) : !(v < value({b.row + 1, 1}) && v <= right)) return false;
    }
    return true;
}

inline bool is_prefix_standard(const Filling& t, const Cell& c, bool inclusive) {
    return is_prefix_standard(t, CellOrder(t.shape()), c, inclusive);
}

/// A filling with content (1^n): an element of X.
class StandardFilling {
public:
    explicit StandardFilling(Filling f) : filling_(std::move(f)) {
        if (!has_standard_content(filling_))
            throw invalid_input("filling must contain each of 1.." + std::to_string(filling_.size()) + " exactly once");
    }

    const Filling& filling() const noexcept { return filling_; }
    operator const Filling&() const noexcept { return filling_; }
    const Composition& shape() const noexcept { return filling_.shape(); }
    int size() const noexcept { return filling_.size(); }

    friend bool operator==(const StandardFilling& a, const StandardFilling& b) noexcept {
        return a.filling_ == b.filling_;
    }

private:
    Filling filling_;
};

/// A filling with content (1^n) in which every entry is stable.
class StandardImmaculateTableau {
public:
    explicit StandardImmaculateTableau(Filling f) : filling_(std::move(f)) {
        if (!has_standard_content(filling_))
            throw invalid_input("tableau must contain each of 1.." + std::to_string(filling_.size()) + " exactly once");
        for (const Cell& c : diagram_cells(filling_.shape()))
            if (!detail::stable_unchecked(filling_, c))
                throw invalid_input("entry " + std::to_string(filling_.at(c)) + " at " + to_string(c) + " is not stable");
    }

    const Filling& filling() const noexcept { return filling_; }
    operator const Filling&() const noexcept { return filling_; }
    const Composition& shape() const noexcept { return filling_.shape(); }
    int size() const noexcept { return filling_.size(); }

    friend bool operator==(const StandardImmaculateTableau& a, const StandardImmaculateTableau& b) noexcept {
        return a.filling_ == b.filling_;
    }

private:
    Filling filling_;
};

}  // namespace immaculate
