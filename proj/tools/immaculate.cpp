// Command-line front end: hook grids, counts, enumeration, ψ/φ with traces,
// and verification campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 guard exceeded, 4 input violates a domain invariant.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <immaculate/immaculate.hpp>

namespace {

using namespace immaculate;

enum Exit { ok = 0, verification_failed = 1, bad_parse = 2, too_large = 3, bad_input = 4 };

struct Globals {
    std::string format = "text";
    bool check = false;

    bool json() const { return format == "json"; }
    Checks checks() const { return check ? Checks::on : Checks::off; }
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

int cmd_hooks(const Globals& g, const std::string& shape_arg) {
    const Composition shape = parse_composition(shape_arg);
    if (g.json()) {
        json rows = json::array();
        for (int i = 1; i <= shape.length(); ++i) {
            json row = json::array();
            for (int j = 1; j <= shape.part(i); ++j) row.push_back(hook_length(shape, {i, j}));
            rows.push_back(std::move(row));
        }
        std::cout << json{{"shape", shape.parts()}, {"hooks", rows}}.dump() << '\n';
    } else {
        std::cout << format_hook_grid(shape);
    }
    return ok;
}

int cmd_count(const Globals& g, const std::string& shape_arg, const std::string& method, int max_brute) {
    const Composition shape = parse_composition(shape_arg);
    bigint f;
    if (method == "formula") f = count_formula(shape);
    else if (method == "recursive") f = count_recursive(shape);
    else f = count_bruteforce(shape, max_brute);
    if (g.json())
        std::cout << json{{"shape", shape.parts()}, {"method", method}, {"count", f.str()}}.dump() << '\n';
    else
        std::cout << f << '\n';
    return ok;
}

int cmd_enumerate(const Globals& g, const std::string& shape_arg, std::optional<std::uint64_t> limit) {
    const Composition shape = parse_composition(shape_arg);
    std::uint64_t count = 0;
    json all = json::array();
    for_each_standard_immaculate(shape, [&](const StandardImmaculateTableau& t) {
        if (limit && count >= *limit) return false;
        if (g.json()) {
            all.push_back(t.filling().rows());
        } else {
            if (count) std::cout << '\n';
            std::cout << format_text(t.filling());
        }
        ++count;
        return true;
    });
    if (g.json())
        std::cout << json{{"shape", shape.parts()}, {"tableaux", all}, {"count", count}}.dump() << '\n';
    else
        std::cout << "\n" << count << " standard immaculate tableaux\n";
    return ok;
}

int cmd_psi(const Globals& g, const std::string& path, bool trace) {
    const PairPJ pair = parse_pair(read_input(path));
    const PsiResult result = psi(pair, g.checks());
    if (g.json()) {
        json out = to_json(result.T.filling());
        if (trace) out["trace"] = to_json(result.trace);
        std::cout << out.dump() << '\n';
        return ok;
    }
    if (trace) {
        for (std::size_t k = 0; k < result.trace.size(); ++k) {
            const PsiState& s = result.trace[k];
            std::cout << "step " << k + 1 << "\nP:\n" << format_marked(s.P, s.path) << "J:\n" << format_text(s.J) << '\n';
        }
        std::cout << "T:\n";
    }
    std::cout << format_text(result.T.filling());
    return ok;
}

int cmd_phi(const Globals& g, const std::string& path, bool trace) {
    const StandardFilling t(parse_filling(read_input(path)));
    const PhiResult result = phi(t, g.checks());
    if (g.json()) {
        json out = to_json(result.pair);
        if (trace) out["trace"] = to_json(result.trace);
        std::cout << out.dump() << '\n';
        return ok;
    }
    if (trace) {
        for (std::size_t k = 0; k < result.trace.size(); ++k) {
            const PhiState& s = result.trace[k];
            std::cout << "step " << k + 1;
            if (s.entry) std::cout << " (slide " << s.entry << ")";
            std::cout << "\nT:\n" << format_marked(s.T, s.path) << "S:\n" << format_text(s.S) << '\n';
        }
        std::cout << "P, J:\n";
    }
    std::cout << format_text(result.pair);
    return ok;
}

struct VerifyArgs {
    std::string shape;
    std::optional<int> n;
    std::string mode = "exhaustive";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    int max_exhaustive = default_exhaustive_limit;
    int max_brute = default_brute_force_limit;
    std::string failures_out = "verify_failures.json";
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    std::vector<Composition> shapes;
    if (a.n && !a.shape.empty()) throw parse_error("give either a shape or --n, not both");
    if (a.n) shapes = compositions_of(*a.n);
    else if (!a.shape.empty()) shapes.push_back(parse_composition(a.shape));
    else throw parse_error("verify needs a shape or --n");

    VerifyOptions options;
    options.mode = a.mode == "sampled" ? VerifyMode::sampled : VerifyMode::exhaustive;
    options.sample_size = a.samples;
    options.seed = a.seed;
    options.jobs = a.jobs;
    options.max_exhaustive = a.max_exhaustive;
    options.max_brute = a.max_brute;

    std::vector<VerificationReport> reports;
    for (const Composition& shape : shapes) reports.push_back(verify_bijection(shape, options));

    std::size_t passed = 0;
    json failures = json::array();
    for (const auto& r : reports) {
        if (r.passed()) ++passed;
        else failures.push_back(to_json(r));
    }
    const bool all_passed = passed == reports.size();

    if (g.json()) {
        json out = json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << json{{"reports", out}, {"shapes", reports.size()}, {"passed", passed}, {"ok", all_passed}}.dump()
                  << '\n';
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.shape.str() << "  f=" << r.count_formula
                      << " recursive=" << r.count_recursive << " brute="
                      << (r.count_bruteforce ? r.count_bruteforce->str() : std::string("-")) << " |X|=" << r.x_size
                      << " |Y|=" << r.y_size << " fillings=" << r.fillings_checked << " pairs=" << r.pairs_checked
                      << '\n';
            for (const auto& f : r.roundtrip_failures) std::cout << "  roundtrip " << f.stage << ": " << f.input << " -> " << f.detail << '\n';
            for (const auto& f : r.assertion_failures) std::cout << "  assertion " << f.stage << ": " << f.input << " -> " << f.detail << '\n';
        }
        std::cout << passed << "/" << reports.size() << " shapes passed\n";
    }
    if (!all_passed) {
        std::ofstream out(a.failures_out);
        out << failures.dump(2) << '\n';
        std::cerr << "counterexamples written to " << a.failures_out << '\n';
        return verification_failed;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Standard immaculate tableaux: hook-length counts and the (P, J) <-> T bijection"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--check", g.check, "Assert the proof-level invariants while mapping");

    std::string shape_arg;

    auto* hooks = app.add_subcommand("hooks", "Print the hook length of every cell");
    hooks->add_option("shape", shape_arg, "Composition, e.g. 2,1,2")->required();

    std::string method = "formula";
    int max_brute = default_brute_force_limit;
    auto* count = app.add_subcommand("count", "Number of standard immaculate tableaux");
    count->add_option("shape", shape_arg, "Composition")->required();
    count->add_option("--method", method, "formula, recursive or brute")->check(CLI::IsMember({"formula", "recursive", "brute"}));
    count->add_option("--max-brute", max_brute, "Largest n the brute-force method accepts");

    std::optional<std::uint64_t> limit;
    auto* enumerate = app.add_subcommand("enumerate", "List the standard immaculate tableaux");
    enumerate->add_option("shape", shape_arg, "Composition")->required();
    enumerate->add_option("--limit", limit, "Stop after this many tableaux");

    std::string input = "-";
    bool trace = false;
    auto* psi_cmd = app.add_subcommand("psi", "Map a pair (P, J) to a standard filling T");
    psi_cmd->add_option("file", input, "Pair file, or - for stdin")->required();
    psi_cmd->add_flag("--trace", trace, "Print every intermediate (P_k, J_k)");

    auto* phi_cmd = app.add_subcommand("phi", "Map a standard filling T to its pair (P, J)");
    phi_cmd->add_option("file", input, "Tableau file, or - for stdin")->required();
    phi_cmd->add_flag("--trace", trace, "Print every intermediate (T_k, S_k) and slide path");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check the counts and that psi and phi are inverse");
    verify->add_option("shape", va.shape, "Composition to verify");
    verify->add_option("--n", va.n, "Verify every composition of n");
    verify->add_option("--mode", va.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", va.samples, "Samples per shape in sampled mode");
    verify->add_option("--seed", va.seed, "Seed for sampled mode");
    verify->add_option("--jobs", va.jobs, "Worker threads (0 = all cores)");
    verify->add_option("--max-exhaustive", va.max_exhaustive, "Largest n exhaustive mode accepts");
    verify->add_option("--max-brute", va.max_brute, "Largest n for the brute-force count");
    verify->add_option("--failures-out", va.failures_out, "Where to save counterexamples as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_parse;
    }

    try {
        if (*hooks) return cmd_hooks(g, shape_arg);
        if (*count) return cmd_count(g, shape_arg, method, max_brute);
        if (*enumerate) return cmd_enumerate(g, shape_arg, limit);
        if (*psi_cmd) return cmd_psi(g, input, trace);
        if (*phi_cmd) return cmd_phi(g, input, trace);
        if (*verify) return cmd_verify(g, va);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return bad_parse;
    } catch (const guard_exceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return too_large;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return bad_input;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return verification_failed;
    }
    return ok;
}
