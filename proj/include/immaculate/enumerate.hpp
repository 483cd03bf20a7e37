#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <type_traits>
#include <vector>

#include "bijection.hpp"
#include "composition.hpp"
#include "error.hpp"
#include "tableau.hpp"

namespace immaculate {

/// All compositions of n, in lexicographic order of their parts.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 1) throw invalid_input("compositions_of needs n >= 1");
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// n! as a 64-bit value; n ≤ 20.
inline std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw guard_exceeded("n! does not fit 64 bits for n = " + std::to_string(n));
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

/// The values 1..n of the rank-th permutation in lexicographic order.
inline std::vector<int> permutation_at_rank(int n, std::uint64_t rank) {
    if (rank >= factorial_u64(n)) throw invalid_input("permutation rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int remaining = n; remaining > 0; --remaining) {
        const std::uint64_t block = factorial_u64(remaining - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

/// Input range over every standard filling of a shape: the n! assignments of
/// 1..n to the row-major cells, in lexicographic permutation order. Lazily
/// generated; a [first, last) rank window supports range splitting.
class StandardFillings {
public:
    explicit StandardFillings(const Composition& shape)
        : StandardFillings(shape, 0, factorial_u64(shape.size())) {}

    StandardFillings(const Composition& shape, std::uint64_t first, std::uint64_t last)
        : shape_(std::make_shared<const Composition>(shape)), first_(first), last_(std::min(last, factorial_u64(shape.size()))) {}

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = StandardFilling;
        using difference_type = std::ptrdiff_t;
        using pointer = const StandardFilling*;
        using reference = const StandardFilling&;

        iterator() = default;
        iterator(std::shared_ptr<const Composition> shape, std::uint64_t rank, std::uint64_t last)
            : shape_(std::move(shape)), rank_(rank), last_(last) {
            if (rank_ < last_) {
                perm_ = permutation_at_rank(shape_->size(), rank_);
                current_.emplace(Filling(shape_, perm_));
            }
        }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }

        iterator& operator++() {
            if (++rank_ < last_) {
                std::next_permutation(perm_.begin(), perm_.end());
                current_.emplace(Filling(shape_, perm_));
            } else {
                current_.reset();
            }
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.rank_ >= it.last_; }

    private:
        std::shared_ptr<const Composition> shape_;
        std::uint64_t rank_ = 0;
        std::uint64_t last_ = 0;
        std::vector<int> perm_;
        std::optional<StandardFilling> current_;
    };

    iterator begin() const { return iterator(shape_, first_, last_); }
    std::default_sentinel_t end() const noexcept { return {}; }
    std::uint64_t size() const noexcept { return last_ > first_ ? last_ - first_ : 0; }

private:
    std::shared_ptr<const Composition> shape_;
    std::uint64_t first_;
    std::uint64_t last_;
};

inline StandardFillings all_standard_fillings(const Composition& shape) { return StandardFillings(shape); }

inline constexpr int default_brute_force_limit = 10;

/// Filters all n! fillings through is_standard_immaculate. Refuses n > max_n.
inline std::vector<StandardImmaculateTableau> brute_force_standard_immaculate(const Composition& shape,
                                                                              int max_n = default_brute_force_limit) {
    if (shape.size() > max_n)
        throw guard_exceeded("brute force over " + std::to_string(shape.size()) + "! fillings exceeds the limit n <= " +
                             std::to_string(max_n) + "; use the recursive enumerator instead");
    std::vector<StandardImmaculateTableau> out;
    for (const StandardFilling& t : all_standard_fillings(shape))
        if (is_standard_immaculate(t)) out.emplace_back(t.filling());
    return out;
}

/// Visits every standard immaculate tableau of the shape exactly once.
///
/// The largest entry n of a standard immaculate tableau is stable only where
/// it has no right neighbor and, in column 1, no lower neighbor: at the end of
/// a row of length > 1, or alone in the last row. Removing it leaves a standard
/// immaculate tableau of the smaller shape, and every such placement is legal,
/// so the tableaux are generated by placing n, n-1, ..., 1 in turn.
///
/// `visit` receives a StandardImmaculateTableau; if it returns bool, returning
/// false stops the enumeration.
template <class Visitor>
void for_each_standard_immaculate(const Composition& shape, Visitor&& visit) {
    auto owned = std::make_shared<const Composition>(shape);
    std::vector<int> parts = shape.parts();
    std::vector<int> entries(static_cast<std::size_t>(shape.size()), 0);
    bool stopped = false;

    auto rec = [&](auto&& self, int value) -> void {
        if (stopped) return;
        if (value == 0) {
            StandardImmaculateTableau t(Filling(owned, entries));
            if constexpr (std::is_convertible_v<std::invoke_result_t<Visitor&, const StandardImmaculateTableau&>, bool>) {
                if (!visit(t)) stopped = true;
            } else {
                visit(t);
            }
            return;
        }
        for (std::size_t r = 0; r < parts.size() && !stopped; ++r) {
            const int len = parts[r];
            const bool last_row = r + 1 == parts.size();
            if (len > 1 || (last_row && len == 1)) {
                const Cell c{static_cast<int>(r + 1), len};
                entries[owned->slot(c)] = value;
                if (len > 1) {
                    --parts[r];
                    self(self, value - 1);
                    ++parts[r];
                } else {
                    parts.pop_back();
                    self(self, value - 1);
                    parts.push_back(1);
                }
                entries[owned->slot(c)] = 0;
            }
        }
    };
    rec(rec, shape.size());
}

/// Materialized recursive enumeration.
inline std::vector<StandardImmaculateTableau> standard_immaculate_tableaux(const Composition& shape) {
    std::vector<StandardImmaculateTableau> out;
    for_each_standard_immaculate(shape, [&](const StandardImmaculateTableau& t) { out.push_back(t); });
    return out;
}

/// f^α by the largest-entry removal recursion, memoized on shapes.
inline bigint count_recursive(const Composition& shape) {
    std::map<std::vector<int>, bigint> memo;
    auto rec = [&](auto&& self, std::vector<int>& parts) -> bigint {
        if (parts.empty()) return 1;
        if (auto it = memo.find(parts); it != memo.end()) return it->second;
        bigint total = 0;
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (parts[r] > 1) {
                --parts[r];
                total += self(self, parts);
                ++parts[r];
            }
        }
        if (parts.back() == 1) {
            parts.pop_back();
            total += self(self, parts);
            parts.push_back(1);
        }
        memo.emplace(parts, total);
        return total;
    };
    std::vector<int> parts = shape.parts();
    return rec(rec, parts);
}

/// Number of fillings passing is_standard_immaculate, by exhaustive filter.
inline bigint count_bruteforce(const Composition& shape, int max_n = default_brute_force_limit) {
    if (shape.size() > max_n)
        throw guard_exceeded("brute force count for n = " + std::to_string(shape.size()) + " exceeds the limit n <= " +
                             std::to_string(max_n));
    bigint count = 0;
    for (const StandardFilling& t : all_standard_fillings(shape))
        if (is_standard_immaculate(t)) ++count;
    return count;
}

/// Input range over all hook tableaux of a shape, in mixed-radix order over
/// the row-major cells (the last cell varies fastest).
class HookTableaux {
public:
    explicit HookTableaux(const Composition& shape)
        : shape_(std::make_shared<const Composition>(shape)), radix_(hook_lengths(shape)) {}

    /// ∏ h_c.
    bigint size() const { return hook_product(*shape_); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = HookTableau;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(std::shared_ptr<const Composition> shape, const std::vector<int>* radix)
            : shape_(std::move(shape)), radix_(radix), digits_(radix->size(), 1), done_(false) {
            current_.emplace(shape_, digits_);
        }

        const HookTableau& operator*() const { return *current_; }
        const HookTableau* operator->() const { return &*current_; }

        iterator& operator++() {
            std::size_t pos = digits_.size();
            while (pos > 0) {
                --pos;
                if (digits_[pos] < (*radix_)[pos]) {
                    ++digits_[pos];
                    std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, digits_.end(), 1);
                    current_.emplace(shape_, digits_);
                    return *this;
                }
            }
            done_ = true;
            current_.reset();
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        std::shared_ptr<const Composition> shape_;
        const std::vector<int>* radix_ = nullptr;
        std::vector<int> digits_;
        std::optional<HookTableau> current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(shape_, &radix_); }
    std::default_sentinel_t end() const noexcept { return {}; }

    /// The rank-th hook tableau in iteration order.
    HookTableau at_rank(std::uint64_t rank) const {
        std::vector<int> digits(radix_.size(), 1);
        for (std::size_t pos = radix_.size(); pos > 0; --pos) {
            const auto base = static_cast<std::uint64_t>(radix_[pos - 1]);
            digits[pos - 1] = static_cast<int>(rank % base) + 1;
            rank /= base;
        }
        if (rank != 0) throw invalid_input("hook tableau rank out of range");
        return HookTableau(shape_, std::move(digits));
    }

private:
    std::shared_ptr<const Composition> shape_;
    std::vector<int> radix_;
};

inline HookTableaux all_hook_tableaux(const Composition& shape) { return HookTableaux(shape); }

}  // namespace immaculate
