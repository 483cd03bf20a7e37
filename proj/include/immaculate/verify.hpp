#pragma once

// Exhaustive and sampled checks that ψ and φ are mutually inverse, together
// with the three independent counts of standard immaculate tableaux.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bijection.hpp"
#include "composition.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "tableau.hpp"

namespace immaculate {

enum class VerifyMode { exhaustive, sampled };

inline constexpr int default_exhaustive_limit = 8;

struct VerifyOptions {
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t sample_size = 1000;
    std::uint64_t seed = 0;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned jobs = 1;
    int max_exhaustive = default_exhaustive_limit;
    int max_brute = default_brute_force_limit;
    /// Extra pairs always checked in sampled mode.
    std::vector<PairPJ> forced_pairs;
    /// Failures kept per list; the totals are still counted.
    std::size_t max_recorded_failures = 100;
};

struct Failure {
    std::string input;  ///< canonical text of the offending input
    std::string stage;
    std::string detail;
};

struct VerificationReport {
    Composition shape{1};
    VerifyMode mode = VerifyMode::exhaustive;
    bigint count_formula;
    bigint count_recursive;
    std::optional<bigint> count_bruteforce;  ///< absent when n exceeds the brute-force limit
    bigint x_size;
    bigint y_size;
    std::uint64_t fillings_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t roundtrip_failure_count = 0;
    std::uint64_t assertion_failure_count = 0;
    std::vector<Failure> roundtrip_failures;
    std::vector<Failure> assertion_failures;

    bool counts_agree() const {
        const bigint n_fact = factorial(shape.size());
        return count_formula == count_recursive && (!count_bruteforce || *count_bruteforce == count_formula) &&
               x_size == n_fact && y_size == n_fact && count_formula * hook_product(shape) == n_fact;
    }

    bool passed() const { return counts_agree() && roundtrip_failure_count == 0 && assertion_failure_count == 0; }
};

namespace detail {

inline std::string rows_text(const Filling& f) {
    std::string out;
    bool first_row = true;
    for (const auto& row : f.rows()) {
        if (!first_row) out += " / ";
        first_row = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
    }
    return out;
}

inline std::string describe(const StandardFilling& t) { return "T = " + rows_text(t.filling()); }

inline std::string describe(const PairPJ& p) {
    return "P = " + rows_text(p.P.filling()) + "; J = " + rows_text(p.J.as_filling());
}

/// splitmix64 finalizer, used to derive independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Collects failures from several workers.
class FailureLog {
public:
    explicit FailureLog(std::size_t cap) : cap_(cap) {}

    void roundtrip(Failure f) { add(roundtrip_, roundtrip_count_, std::move(f)); }
    void assertion(Failure f) { add(assertion_, assertion_count_, std::move(f)); }

    void drain_into(VerificationReport& r) {
        std::lock_guard lock(mutex_);
        r.roundtrip_failure_count = roundtrip_count_;
        r.assertion_failure_count = assertion_count_;
        r.roundtrip_failures = std::move(roundtrip_);
        r.assertion_failures = std::move(assertion_);
    }

private:
    void add(std::vector<Failure>& list, std::uint64_t& count, Failure f) {
        std::lock_guard lock(mutex_);
        ++count;
        if (list.size() < cap_) list.push_back(std::move(f));
    }

    std::mutex mutex_;
    std::size_t cap_;
    std::vector<Failure> roundtrip_, assertion_;
    std::uint64_t roundtrip_count_ = 0, assertion_count_ = 0;
};

/// Runs body(first, last) over [0, total) split into contiguous chunks.
inline void parallel_ranges(std::uint64_t total, unsigned jobs,
                            const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    if (total < 2 * static_cast<std::uint64_t>(jobs) || jobs == 1) {
        body(0, total);
        return;
    }
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        const std::uint64_t first = w * chunk;
        const std::uint64_t last = std::min(total, first + chunk);
        if (first >= last) break;
        workers.emplace_back([&, w, first, last] {
            try {
                body(first, last);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// ψ(φ(T)) == T with all checks on. Returns false on any failure.
inline bool check_filling(const StandardFilling& t, FailureLog& log) {
    try {
        const PhiResult forward = phi(t, Checks::on);
        const PsiResult back = psi(forward.pair, Checks::on);
        if (!(back.T == t)) {
            log.roundtrip({describe(t), "psi(phi(T))", "got " + describe(back.T)});
            return false;
        }
    } catch (const std::exception& e) {
        log.assertion({describe(t), "psi(phi(T))", e.what()});
        return false;
    }
    return true;
}

/// φ(ψ(P,J)) == (P,J) with all checks on.
inline bool check_pair(const PairPJ& p, FailureLog& log) {
    try {
        const PsiResult forward = psi(p, Checks::on);
        const PhiResult back = phi(forward.T, Checks::on);
        if (!(back.pair == p)) {
            log.roundtrip({describe(p), "phi(psi(P,J))", "got " + describe(back.pair)});
            return false;
        }
    } catch (const std::exception& e) {
        log.assertion({describe(p), "phi(psi(P,J))", e.what()});
        return false;
    }
    return true;
}

}  // namespace detail

/// Uniform integer in [0, bound) from 64-bit words by rejection sampling.
/// Unlike std::uniform_int_distribution the result sequence is the same on
/// every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw invalid_input("uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % bound;
}

/// Fisher-Yates shuffle of 1..n over the row-major cells.
inline StandardFilling random_standard_filling(const Composition& shape, std::mt19937_64& rng) {
    std::vector<int> values(static_cast<std::size_t>(shape.size()));
    std::iota(values.begin(), values.end(), 1);
    for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[uniform_below(rng, i)]);
    return StandardFilling(Filling(std::make_shared<const Composition>(shape), std::move(values)));
}

/// Independent uniform value in 1..h_c at every cell.
inline HookTableau random_hook_tableau(const Composition& shape, std::mt19937_64& rng) {
    std::vector<int> values;
    for (int h : hook_lengths(shape)) values.push_back(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(h))) + 1);
    return HookTableau(std::make_shared<const Composition>(shape), std::move(values));
}

/// Seeded sample number `index`: a random filling, and a random pair whose P
/// is φ of a second random filling.
inline StandardFilling sample_filling(const Composition& shape, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(detail::mix_seed(seed, 2 * index));
    return random_standard_filling(shape, rng);
}

inline PairPJ sample_pair(const Composition& shape, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(detail::mix_seed(seed, 2 * index + 1));
    StandardFilling base = random_standard_filling(shape, rng);
    HookTableau j = random_hook_tableau(shape, rng);
    return PairPJ(phi(base).pair.P, std::move(j));
}

/// Checks the three counts of f^α and that ψ and φ invert each other.
///
/// Exhaustive mode walks all of X and all of Y (refused above
/// options.max_exhaustive). Sampled mode checks options.sample_size seeded
/// fillings and pairs plus options.forced_pairs.
inline VerificationReport verify_bijection(const Composition& shape, const VerifyOptions& options = {}) {
    const int n = shape.size();
    VerificationReport report;
    report.shape = shape;
    report.mode = options.mode;
    report.count_formula = count_formula(shape);
    report.count_recursive = count_recursive(shape);
    detail::FailureLog log(options.max_recorded_failures);

    if (options.mode == VerifyMode::exhaustive) {
        if (n > options.max_exhaustive)
            throw guard_exceeded("exhaustive verification of n = " + std::to_string(n) + " exceeds the limit n <= " +
                                 std::to_string(options.max_exhaustive));

        // X: every filling, counting the standard immaculate ones on the way.
        const std::uint64_t x_total = factorial_u64(n);
        std::mutex count_mutex;
        std::uint64_t x_seen = 0, immaculate_seen = 0;
        detail::parallel_ranges(x_total, options.jobs, [&](std::uint64_t first, std::uint64_t last) {
            std::uint64_t seen = 0, immaculate = 0;
            for (const StandardFilling& t : StandardFillings(shape, first, last)) {
                ++seen;
                if (is_standard_immaculate(t)) ++immaculate;
                detail::check_filling(t, log);
            }
            std::lock_guard lock(count_mutex);
            x_seen += seen;
            immaculate_seen += immaculate;
        });
        report.x_size = x_seen;
        report.fillings_checked = x_seen;
        if (n <= options.max_brute) report.count_bruteforce = bigint(immaculate_seen);

        // Y: every standard immaculate tableau against every hook tableau.
        const auto tableaux = standard_immaculate_tableaux(shape);
        const HookTableaux hooks(shape);
        const auto hook_total = static_cast<std::uint64_t>(hooks.size());
        const std::uint64_t y_total = tableaux.size() * hook_total;
        std::uint64_t y_seen = 0;
        detail::parallel_ranges(y_total, options.jobs, [&](std::uint64_t first, std::uint64_t last) {
            std::uint64_t seen = 0;
            for (std::uint64_t r = first; r < last; ++r) {
                ++seen;
                detail::check_pair(PairPJ(tableaux[r / hook_total], hooks.at_rank(r % hook_total)), log);
            }
            std::lock_guard lock(count_mutex);
            y_seen += seen;
        });
        report.y_size = y_seen;
        report.pairs_checked = y_seen;
    } else {
        if (n <= options.max_brute) report.count_bruteforce = count_bruteforce(shape, options.max_brute);
        report.x_size = factorial(n);
        report.y_size = report.count_recursive * hook_product(shape);

        std::mutex count_mutex;
        detail::parallel_ranges(options.sample_size, options.jobs, [&](std::uint64_t first, std::uint64_t last) {
            std::uint64_t fillings = 0, pairs = 0;
            for (std::uint64_t i = first; i < last; ++i) {
                ++fillings;
                detail::check_filling(sample_filling(shape, options.seed, i), log);
                try {
                    PairPJ p = sample_pair(shape, options.seed, i);
                    ++pairs;
                    detail::check_pair(p, log);
                } catch (const std::exception& e) {
                    log.assertion({"sample " + std::to_string(i), "sample_pair", e.what()});
                }
            }
            std::lock_guard lock(count_mutex);
            report.fillings_checked += fillings;
            report.pairs_checked += pairs;
        });
        for (const PairPJ& p : options.forced_pairs) {
            if (p.P.shape() != shape) throw invalid_input("forced pair has shape " + p.P.shape().str());
            ++report.pairs_checked;
            detail::check_pair(p, log);
        }
    }
    log.drain_into(report);
    return report;
}

}  // namespace immaculate
