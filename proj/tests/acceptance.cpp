// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <immaculate/immaculate.hpp>

using namespace immaculate;

namespace {

using Rows = std::vector<std::vector<int>>;

struct Outcome {
    bool ok;
    std::string detail;
};

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(IMMACULATE_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

Path make_path(std::initializer_list<std::pair<int, int>> list) {
    Path out;
    for (auto [i, j] : list) out.push_back({i, j});
    return out;
}

Outcome hook_grids() {
    const std::string grid = run_cli("hooks 2,1,2");
    if (grid != "5 1\n3\n2 1\n") return {false, "hooks 2,1,2 printed '" + grid + "'"};
    const std::string big = run_cli("hooks 4,1,2,3");
    std::istringstream in(big);
    std::string row1, row2;
    std::getline(in, row1);
    std::getline(in, row2);
    std::istringstream r1(row1);
    int h11 = 0, h12 = 0;
    r1 >> h11 >> h12;
    const int h21 = std::stoi(row2);
    const Composition shape{4, 1, 2, 3};
    if (h12 != 3 || h21 != 6 || hook_length(shape, {1, 2}) != 3 || hook_length(shape, {2, 1}) != 6)
        return {false, "h(1,2)=" + std::to_string(h12) + " h(2,1)=" + std::to_string(h21)};
    return {true, "5 1 / 3 / 2 1; h(1,2)=3, h(2,1)=6"};
}

Outcome small_shape_count() {
    const Composition shape{2, 1, 2};
    if (count_formula(shape) != 4) return {false, "count_formula(2,1,2) = " + count_formula(shape).str()};
    const std::set<Rows> expected{{{1, 2}, {3}, {4, 5}}, {{1, 3}, {2}, {4, 5}}, {{1, 4}, {2}, {3, 5}}, {{1, 5}, {2}, {3, 4}}};
    std::set<Rows> got;
    std::size_t visits = 0;
    for_each_standard_immaculate(shape, [&](const StandardImmaculateTableau& t) {
        got.insert(t.filling().rows());
        ++visits;
    });
    if (got != expected || visits != 4) return {false, "enumeration differs from the four expected tableaux"};
    return {true, "f = 4, enumeration = the four tableaux"};
}

Outcome formula_identity() {
    std::vector<Composition> shapes;
    for (int n = 1; n <= 8; ++n)
        for (auto& s : compositions_of(n)) shapes.push_back(std::move(s));
    if (shapes.size() != 255) return {false, "expected 255 shapes, got " + std::to_string(shapes.size())};

    std::atomic<std::size_t> next{0};
    std::atomic<int> bad{0};
    std::vector<std::thread> pool;
    const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < shapes.size(); i = next++) {
                const Composition& s = shapes[i];
                const bigint f = count_formula(s);
                const bool ok = count_recursive(s) == f && count_bruteforce(s) == f &&
                                f * hook_product(s) == factorial(s.size());
                if (!ok) ++bad;
            }
        });
    for (auto& t : pool) t.join();
    if (bad) return {false, std::to_string(bad.load()) + " shapes disagree"};
    return {true, "255 shapes: formula = recursive = brute force, f*prod(h) = n!"};
}

Outcome bijectivity() {
    VerifyOptions options;
    options.jobs = 0;
    std::size_t shapes = 0;
    std::uint64_t x = 0, y = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& s : compositions_of(n)) {
            const auto r = verify_bijection(s, options);
            if (!r.passed()) {
                std::string why = "shape " + s.str() + " failed";
                if (!r.roundtrip_failures.empty()) why += ": " + r.roundtrip_failures.front().detail;
                if (!r.assertion_failures.empty()) why += ": " + r.assertion_failures.front().detail;
                return {false, why};
            }
            ++shapes;
            x += r.fillings_checked;
            y += r.pairs_checked;
        }
    return {true, std::to_string(shapes) + " shapes, " + std::to_string(x) + " fillings and " + std::to_string(y) +
                      " pairs round-tripped with checks on"};
}

Outcome worked_example() {
    const Rows P1{{1, 5, 8, 9}, {2}, {3, 4, 11, 12}, {6, 10}, {7}};
    const Rows J1{{8, 2, 1, 1}, {3}, {6, 3, 1, 1}, {1, 1}, {1}};
    const Rows T{{11, 8, 5, 9}, {3}, {10, 12, 2, 4}, {1, 6}, {7}};
    const Rows P4{{11, 5, 8, 9}, {3}, {10, 2, 4, 12}, {1, 6}, {7}};
    const Rows J4{{1, 2, 1, 1}, {1}, {1, 3, 1, 1}, {1, 1}, {1}};
    const Rows ones{{1, 1, 1, 1}, {1}, {1, 1, 1, 1}, {1, 1}, {1}};
    const std::vector<Rows> P = {P1,
                                 {{11, 5, 8, 9}, {1}, {2, 3, 4, 12}, {6, 10}, {7}},
                                 {{11, 5, 8, 9}, {3}, {1, 2, 4, 12}, {6, 10}, {7}},
                                 P4, P4, P4,
                                 {{11, 8, 5, 9}, {3}, {10, 2, 4, 12}, {1, 6}, {7}},
                                 T, T, T, T, T};
    const std::vector<Rows> J = {J1,
                                 {{1, 2, 1, 1}, {3}, {6, 3, 1, 1}, {1, 1}, {1}},
                                 {{1, 2, 1, 1}, {1}, {6, 3, 1, 1}, {1, 1}, {1}},
                                 J4, J4, J4,
                                 {{1, 1, 1, 1}, {1}, {1, 3, 1, 1}, {1, 1}, {1}},
                                 ones, ones, ones, ones, ones};

    const PairPJ pair{StandardImmaculateTableau{Filling{P1}}, HookTableau{Filling{J1}}};
    const PsiResult r = psi(pair, Checks::on);
    if (r.T.filling().rows() != T) return {false, "final T differs"};
    if (r.trace.size() != 12) return {false, "trace has " + std::to_string(r.trace.size()) + " states"};
    for (std::size_t k = 0; k < 12; ++k)
        if (r.trace[k].P.rows() != P[k] || r.trace[k].J.rows() != J[k])
            return {false, "state " + std::to_string(k + 1) + " differs"};
    if (r.trace[0].path != make_path({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}})) return {false, "step-1 path differs"};

    const PhiResult back = phi(r.T, Checks::on);
    if (!(back.pair == pair)) return {false, "phi(T) is not the original pair"};
    bool saw_slide = false;
    for (const PhiState& s : back.trace)
        if (s.entry == 10 && s.T.rows() == P4) saw_slide = s.path == make_path({{3, 1}, {4, 1}, {4, 2}});
    if (!saw_slide) return {false, "slide of 10 did not follow (3,1),(4,1),(4,2)"};
    return {true, "12 states match; step-1 path and slide of 10 match"};
}

Outcome random_roundtrips() {
    const Composition shape{4, 1, 4, 2, 1, 3, 2, 1, 1, 1};
    if (shape.size() != 20) return {false, "shape is not n = 20"};
    int failures = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const StandardFilling t = sample_filling(shape, 20240101, i);
        try {
            if (!(psi(phi(t, Checks::on).pair, Checks::on).T == t)) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    if (failures) return {false, std::to_string(failures) + " of 1000 failed"};
    return {true, "1000 seeded fillings of " + shape.str() + " round-tripped"};
}

Outcome path_encoding() {
    std::uint64_t checked = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& s : compositions_of(n))
            for (const Cell& c : diagram_cells(s))
                for (int v = 1; v <= hook_length(s, c); ++v) {
                    if (hook_index_of_path(s, forward_path(s, c, v), Checks::on) != v)
                        return {false, "shape " + s.str() + " cell " + to_string(c) + " value " + std::to_string(v)};
                    ++checked;
                }
    return {true, std::to_string(checked) + " (shape, cell, value) triples"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"1 hook grids", 1.0, hook_grids},
        {"2 count and enumeration of (2,1,2)", 1.0, small_shape_count},
        {"3 formula identity for all 255 shapes with n <= 8", 120.0, formula_identity},
        {"4 exhaustive bijectivity for n <= 6", 300.0, bijectivity},
        {"5 worked example state by state", 1.0, worked_example},
        {"6 1000 random round-trips at n = 20", 30.0, random_roundtrips},
        {"7 path encoding inverse for n <= 8", 30.0, path_encoding},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool ok = o.ok && in_time;
        if (!ok) ++failed;
        std::printf("[%s] %-50s %8.3fs (budget %gs)  %s%s\n", ok ? "PASS" : "FAIL", c.name, secs, c.budget_seconds,
                    o.detail.c_str(), in_time ? "" : "  [over time budget]");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
