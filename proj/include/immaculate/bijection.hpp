#pragma once

// The bijection ψ: Y → X between pairs (standard immaculate tableau, hook
// tableau) and standard fillings, together with its inverse φ.
//
// ψ walks the cells from c_n down to c_2. At cell c with hook value v it takes
// the v-th cell of the row-major hook of c, forms the path from c to it (along
// row i, or down column 1 and then along the target row), and rotates the
// entries on that path one step towards the end.
//
// φ walks the cells from c_2 up to c_n and slides the entry found at each cell
// with a modified jeu de taquin until it is stable. The slide path is the same
// shape as ψ's paths; its endpoint's position in the hook becomes the hook
// tableau value at the starting cell.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"
#include "error.hpp"
#include "tableau.hpp"

namespace immaculate {

/// Whether the expensive proof-level invariants are asserted while mapping.
/// Output is identical either way.
enum class Checks { off, on };

/// An array J over the diagram with 1 ≤ J_c ≤ h_c.
class HookTableau {
public:
    HookTableau(Composition shape, const std::vector<std::vector<int>>& rows)
        : HookTableau(Filling(std::move(shape), rows)) {}

    explicit HookTableau(const Filling& values) : shape_(values.shared_shape()), values_(values.entries()) {
        validate();
    }

    HookTableau(std::shared_ptr<const Composition> shape, std::vector<int> values)
        : shape_(std::move(shape)), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != shape_->size())
            throw invalid_input("hook tableau size does not match shape " + shape_->str());
        validate();
    }

    static HookTableau ones(std::shared_ptr<const Composition> shape) {
        const auto n = static_cast<std::size_t>(shape->size());
        return HookTableau(std::move(shape), std::vector<int>(n, 1));
    }

    const Composition& shape() const noexcept { return *shape_; }
    const std::shared_ptr<const Composition>& shared_shape() const noexcept { return shape_; }
    const std::vector<int>& values() const noexcept { return values_; }

    int at(const Cell& c) const {
        shape_->require(c);
        return values_[shape_->slot(c)];
    }

    /// Copy with the value at c replaced.
    HookTableau with(const Cell& c, int value) const {
        auto next = values_;
        next[shape_->slot(c)] = value;
        return HookTableau(shape_, std::move(next));
    }

    bool all_ones() const noexcept {
        return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 1; });
    }

    /// Same values viewed as a plain filling, for printing and serialization.
    Filling as_filling() const { return Filling(shape_, values_); }

    std::vector<std::vector<int>> rows() const { return as_filling().rows(); }

    friend bool operator==(const HookTableau& a, const HookTableau& b) noexcept {
        return a.values_ == b.values_ && *a.shape_ == *b.shape_;
    }

private:
    void validate() const {
        for (const Cell& c : diagram_cells(*shape_)) {
            const int v = values_[shape_->slot(c)];
            const int h = hook_length(*shape_, c);
            if (v < 1 || v > h)
                throw invalid_input("hook tableau value " + std::to_string(v) + " at " + to_string(c) +
                                    " is outside 1.." + std::to_string(h));
        }
    }

    std::shared_ptr<const Composition> shape_;
    std::vector<int> values_;
};

/// An element (P, J) of Y.
struct PairPJ {
    PairPJ(StandardImmaculateTableau p, HookTableau j) : P(std::move(p)), J(std::move(j)) {
        if (P.shape() != J.shape())
            throw invalid_input("P has shape " + P.shape().str() + " but J has shape " + J.shape().str());
    }

    StandardImmaculateTableau P;
    HookTableau J;

    friend bool operator==(const PairPJ&, const PairPJ&) = default;
};

/// Cells visited by a slide or rotated by ψ, from start to end.
using Path = std::vector<Cell>;

/// True iff the path is a row run (i,j)..(i,j+k), or, when it starts in
/// column 1, a column-1 run (i,1)..(i+k,1) followed by (i+k,2)..(i+k,l).
inline bool is_hook_path(const Composition& shape, const Path& path) {
    if (path.empty()) return false;
    for (const Cell& c : path)
        if (!shape.contains(c)) return false;
    const Cell start = path.front();
    std::size_t m = 1;
    Cell prev = start;
    if (start.col == 1) {
        while (m < path.size() && path[m].col == 1 && path[m].row == prev.row + 1) prev = path[m++];
    }
    for (; m < path.size(); ++m) {
        if (path[m].row != prev.row || path[m].col != prev.col + 1) return false;
        prev = path[m];
    }
    return true;
}

/// The path from start to the index-th cell (1-based) of its row-major hook.
inline Path forward_path(const Composition& shape, const Cell& start, int index) {
    const int h = hook_length(shape, start);
    if (index < 1 || index > h)
        throw invalid_input("hook index " + std::to_string(index) + " at " + to_string(start) + " is outside 1.." +
                            std::to_string(h));
    // Locate the target cell without materializing the hook.
    Cell target{start.row, start.col + index - 1};
    if (start.col == 1) {
        int remaining = index;
        int row = start.row;
        while (remaining > shape.part(row)) remaining -= shape.part(row++);
        target = {row, remaining};
    }

    Path path;
    path.reserve(static_cast<std::size_t>(index));
    if (target.row == start.row) {
        for (int j = start.col; j <= target.col; ++j) path.push_back({start.row, j});
    } else {
        for (int i = start.row; i <= target.row; ++i) path.push_back({i, 1});
        for (int j = 2; j <= target.col; ++j) path.push_back({target.row, j});
    }
    return path;
}

/// Position of the path's last cell in the row-major hook of its first cell:
/// j′−j+1 within one row, α_i+…+α_{i′−1}+j′ when the path goes down column 1.
inline int hook_index_of_path(const Composition& shape, const Path& path, Checks checks = Checks::off) {
    if (!is_hook_path(shape, path)) throw invalid_input("path does not have the shape of a hook path");
    const Cell& first = path.front();
    const Cell& last = path.back();
    const int index = last.row == first.row ? last.col - first.col + 1
                                            : shape.cells_between_rows(first.row, last.row) + last.col;
    if (checks == Checks::on) {
        const auto hook = hook_cells(shape, first);
        const auto pos = std::find(hook.begin(), hook.end(), last) - hook.begin() + 1;
        detail::check_internal(pos == index, "closed-form hook index " + std::to_string(index) +
                                                 " disagrees with hook position " + std::to_string(pos));
    }
    return index;
}

/// Entry at the last path cell moves to the first; every other entry moves one
/// cell along the path.
inline Filling circular_right_shift(const Filling& t, const Path& path) {
    const Composition& shape = t.shape();
    for (const Cell& c : path) shape.require(c);
    auto entries = t.entries();
    if (path.size() > 1) {
        const int carried = entries[shape.slot(path.back())];
        for (std::size_t m = path.size() - 1; m > 0; --m) entries[shape.slot(path[m])] = entries[shape.slot(path[m - 1])];
        entries[shape.slot(path.front())] = carried;
    }
    return Filling(t.shared_shape(), std::move(entries));
}

/// Entry at the first path cell moves to the last; every other entry moves one
/// cell back along the path.
inline Filling circular_left_shift(const Filling& t, const Path& path) {
    const Composition& shape = t.shape();
    for (const Cell& c : path) shape.require(c);
    auto entries = t.entries();
    if (path.size() > 1) {
        const int carried = entries[shape.slot(path.front())];
        for (std::size_t m = 0; m + 1 < path.size(); ++m) entries[shape.slot(path[m])] = entries[shape.slot(path[m + 1])];
        entries[shape.slot(path.back())] = carried;
    }
    return Filling(t.shared_shape(), std::move(entries));
}

struct SlideResult {
    StandardFilling tableau;
    Path path;
};

/// Modified jeu de taquin slide of entry e: while e is unstable, swap it with
/// its right neighbor (column > 1) or with the smaller of its right and lower
/// neighbors (column 1).
inline SlideResult jdt_slide(const StandardFilling& t, int e, Checks checks = Checks::off) {
    const Filling& f = t.filling();
    const Composition& shape = f.shape();
    if (e < 1 || e > f.size()) throw invalid_input("entry " + std::to_string(e) + " is not in 1.." + std::to_string(f.size()));
    auto found = f.find(e);
    if (!found) throw invalid_input("entry " + std::to_string(e) + " does not occur in the tableau");

    auto entries = f.entries();
    auto value = [&](const Cell& c) { return shape.contains(c) ? entries[shape.slot(c)] : infinity; };

    Cell at = *found;
    Path path{at};
    while (true) {
        const Cell right{at.row, at.col + 1};
        const Cell below{at.row + 1, at.col};
        const int r = value(right);
        Cell next;
        if (at.col > 1) {
            if (e <= r) break;
            next = right;
        } else {
            const int b = value(below);
            if (e < b && e <= r) break;
            // Distinct entries and at most one absent neighbor: no tie.
            detail::check_internal(r != b, "tie between right and lower neighbors of " + to_string(at));
            next = r < b ? right : below;
        }
        std::swap(entries[shape.slot(at)], entries[shape.slot(next)]);
        at = next;
        path.push_back(at);
    }

    StandardFilling result(Filling(f.shared_shape(), std::move(entries)));
    if (checks == Checks::on) {
        detail::check_internal(is_hook_path(shape, path), "slide path of " + std::to_string(e) + " is not a hook path");
        detail::check_internal(circular_left_shift(f, path) == result.filling(),
                               "slide of " + std::to_string(e) + " is not a circular left shift of its path");
    }
    return {std::move(result), std::move(path)};
}

/// One state (P_k, J_k) of ψ and the path rotated to reach the next state.
/// The final state has an empty path.
struct PsiState {
    Filling P;
    HookTableau J;
    Path path;
};

/// One state (T_k, S_k) of φ, the entry slid from it and that slide's path.
/// The final state has entry 0 and an empty path.
struct PhiState {
    Filling T;
    HookTableau S;
    int entry = 0;
    Path path;
};

using PsiTrace = std::vector<PsiState>;
using PhiTrace = std::vector<PhiState>;

struct PsiResult {
    StandardFilling T;
    PsiTrace trace;
};

struct PhiResult {
    PairPJ pair;
    PhiTrace trace;
};

/// ψ(P, J). With checks on, asserts that P_k^{≤c_{n+1−k}} is standard before
/// every rotation.
inline PsiResult psi(const PairPJ& pair, Checks checks = Checks::off) {
    const Composition& shape = pair.P.shape();
    const int n = shape.size();
    const CellOrder order(shape);
    detail::check_internal(pair.J.at(order[1]) == 1, "J at c_1 must be 1");

    PsiTrace trace;
    trace.reserve(static_cast<std::size_t>(n));
    Filling current = pair.P.filling();
    HookTableau hooks = pair.J;
    for (int k = 1; k < n; ++k) {
        const Cell& c = order[n + 1 - k];
        if (checks == Checks::on)
            detail::check_internal(is_prefix_standard(current, order, c, true),
                                   "psi: prefix through " + to_string(c) + " is not standard at step " + std::to_string(k));
        Path path = forward_path(shape, c, hooks.at(c));
        Filling next = circular_right_shift(current, path);
        HookTableau next_hooks = hooks.with(c, 1);
        trace.push_back({std::move(current), std::move(hooks), std::move(path)});
        current = std::move(next);
        hooks = std::move(next_hooks);
    }
    detail::check_internal(hooks.all_ones(), "psi: J_n is not all ones");
    trace.push_back({current, std::move(hooks), {}});
    return {StandardFilling(std::move(current)), std::move(trace)};
}

/// φ(T). With checks on, asserts the standardness hypothesis T_k^{<c_{k+1}}
/// before and the conclusion T_{k+1}^{≤c_{k+1}} after every slide, plus the
/// path-shape and rotation checks inside each slide.
inline PhiResult phi(const StandardFilling& t, Checks checks = Checks::off) {
    const Composition& shape = t.shape();
    const int n = shape.size();
    const CellOrder order(shape);

    PhiTrace trace;
    trace.reserve(static_cast<std::size_t>(n));
    StandardFilling current = t;
    HookTableau hooks = HookTableau::ones(t.filling().shared_shape());
    for (int k = 1; k < n; ++k) {
        const Cell& c = order[k + 1];
        if (checks == Checks::on)
            detail::check_internal(is_prefix_standard(current, order, c, false),
                                   "phi: prefix before " + to_string(c) + " is not standard at step " + std::to_string(k));
        const int e = current.filling().at(c);
        SlideResult slide = jdt_slide(current, e, checks);
        if (checks == Checks::on)
            detail::check_internal(is_prefix_standard(slide.tableau, order, c, true),
                                   "phi: slide of " + std::to_string(e) + " left the prefix through " + to_string(c) +
                                       " unstandard");
        HookTableau next_hooks = hooks.with(c, hook_index_of_path(shape, slide.path, checks));
        trace.push_back({current.filling(), std::move(hooks), e, std::move(slide.path)});
        current = std::move(slide.tableau);
        hooks = std::move(next_hooks);
    }
    detail::check_internal(is_standard_immaculate(current), "phi: result P is not standard immaculate");
    trace.push_back({current.filling(), hooks, 0, {}});
    return {PairPJ(StandardImmaculateTableau(current.filling()), std::move(hooks)), std::move(trace)};
}

}  // namespace immaculate
