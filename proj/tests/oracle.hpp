#pragma once

// Test-only reference implementations written directly from the definitions,
// sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline constexpr int kInf = 1 << 30;

inline int at(const Rows& t, int i, int j) {  // 1-based, ∞ outside
    if (i < 1 || i > static_cast<int>(t.size())) return kInf;
    const auto& row = t[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(row.size())) return kInf;
    return row[static_cast<std::size_t>(j - 1)];
}

inline bool stable(const Rows& t, int i, int j) {
    if (j > 1) return at(t, i, j) <= at(t, i, j + 1);
    return at(t, i, 1) < at(t, i + 1, 1) && at(t, i, 1) <= at(t, i, 2);
}

inline bool all_stable(const Rows& t) {
    for (int i = 1; i <= static_cast<int>(t.size()); ++i)
        for (int j = 1; j <= static_cast<int>(t[static_cast<std::size_t>(i - 1)].size()); ++j)
            if (!stable(t, i, j)) return false;
    return true;
}

inline Rows fill(const std::vector<int>& parts, const std::vector<int>& values) {
    Rows t;
    std::size_t k = 0;
    for (int p : parts) {
        t.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(k), values.begin() + static_cast<std::ptrdiff_t>(k + p));
        k += static_cast<std::size_t>(p);
    }
    return t;
}

/// Every standard immaculate tableau, by filtering all permutations.
inline std::vector<Rows> brute_tableaux(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Rows> out;
    do {
        Rows t = fill(parts, v);
        if (all_stable(t)) out.push_back(std::move(t));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Hook of (i,j) as the set definition, listed row by row, left to right.
inline std::vector<std::pair<int, int>> hook(const std::vector<int>& parts, int i, int j) {
    std::vector<std::pair<int, int>> h;
    const int rows = static_cast<int>(parts.size());
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= parts[static_cast<std::size_t>(r - 1)]; ++c) {
            const bool in = j == 1 ? r >= i : (r == i && c >= j);
            if (in) h.emplace_back(r, c);
        }
    return h;
}

/// All compositions of n via the 2^(n-1) subsets of cut points.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1U << b)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(parts);
    }
    return out;
}

}  // namespace oracle
