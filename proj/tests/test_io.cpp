#include <catch2/catch_amalgamated.hpp>

#include <immaculate/enumerate.hpp>
#include <immaculate/io.hpp>

using namespace immaculate;
using Rows = std::vector<std::vector<int>>;

TEST_CASE("tableau text format") {
    const Filling t({{1, 2}, {3}, {4, 5}});
    CHECK(format_text(t) == "1 2\n3\n4 5\n");
    CHECK(parse_filling("1 2\n3\n4 5\n") == t);
    CHECK(parse_filling("\n  1   2\r\n3\n4 5") == t);
    CHECK_THROWS_AS(parse_filling("1 2\n\n3\n"), parse_error);
    CHECK_THROWS_AS(parse_filling("1 x\n"), parse_error);
    CHECK_THROWS_AS(parse_filling("1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_filling(""), parse_error);
}

TEST_CASE("tableau JSON format") {
    const Filling t({{11, 8, 5, 9}, {3}, {10, 12, 2, 4}, {1, 6}, {7}});
    const json j = to_json(t);
    CHECK(j.dump() == R"({"rows":[[11,8,5,9],[3],[10,12,2,4],[1,6],[7]],"shape":[4,1,4,2,1]})");
    CHECK(parse_filling(j.dump()) == t);
    CHECK_THROWS_AS(parse_filling(R"({"shape":[2,1],"rows":[[1],[2,3]]})"), invalid_input);
    CHECK_THROWS_AS(parse_filling(R"({"shape":[2,1]})"), parse_error);
    CHECK_THROWS_AS(parse_filling("{not json"), parse_error);
}

TEST_CASE("pair formats") {
    const PairPJ p(StandardImmaculateTableau(Filling(Rows{{1, 2}, {3}, {4, 5}})), HookTableau(Filling(Rows{{3, 1}, {2}, {1, 1}})));
    const std::string text = "1 2\n3\n4 5\n\n3 1\n2\n1 1\n";
    CHECK(format_text(p) == text);
    CHECK(parse_pair(text) == p);
    CHECK(parse_pair(to_json(p).dump()) == p);
    CHECK_THROWS_AS(parse_pair("1 2\n3\n4 5\n"), parse_error);
    CHECK_THROWS_AS(parse_pair("1 2\n3\n4 5\n\n3 1\n2 1\n"), invalid_input);
    CHECK_THROWS_AS(parse_pair("1 2\n3\n4 5\n\n6 1\n2\n1 1\n"), invalid_input);
    CHECK_THROWS_AS(parse_pair("2 1\n3\n4 5\n\n1 1\n1\n1 1\n"), invalid_input);
}

TEST_CASE("text and JSON round-trip every filling of a small shape") {
    for (const auto& t : all_standard_fillings({3, 1, 2})) {
        REQUIRE(parse_filling(format_text(t.filling())) == t.filling());
        REQUIRE(parse_filling(to_json(t.filling()).dump()) == t.filling());
    }
}

TEST_CASE("marked rendering and hook grid") {
    const Filling t({{1, 5, 8, 9}, {2}, {3, 4, 11, 12}, {6, 10}, {7}});
    const Path l{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}};
    CHECK(format_marked(t, l) == "[1] 5 8 9\n[2]\n[3] [4] [11] 12\n6 10\n7\n");
    CHECK(format_hook_grid({2, 1, 2}) == "5 1\n3\n2 1\n");
    CHECK(format_hook_grid({1}) == "1\n");
    CHECK(format_hook_grid({4, 1, 2, 3}) == "10 3 2 1\n6\n5 1\n3 2 1\n");
}

TEST_CASE("trace and report JSON") {
    const PairPJ p(StandardImmaculateTableau(Filling(Rows{{1, 2}, {3}, {4, 5}})), HookTableau(Filling(Rows{{3, 1}, {2}, {1, 1}})));
    const json trace = to_json(psi(p).trace);
    REQUIRE(trace.size() == 5);
    CHECK(trace[0]["path"] == json::parse("[[1,1],[2,1]]"));
    CHECK(trace[0]["P"]["rows"] == json::parse("[[1,2],[3],[4,5]]"));
    CHECK(trace[4]["path"].empty());

    const json phi_trace = to_json(phi(StandardFilling(Filling(Rows{{3, 2}, {4}, {1, 5}}))).trace);
    CHECK(phi_trace[3]["entry"] == 3);
    CHECK(phi_trace[4]["entry"].is_null());

    const json report = to_json(verify_bijection({2, 1, 2}));
    CHECK(report["passed"] == true);
    CHECK(report["count_formula"] == "4");
    CHECK(report["x_size"] == "120");
    CHECK(report["y_size"] == "120");
    for (const char* key : {"shape", "count_bruteforce", "count_recursive", "roundtrip_failures", "assertion_failures"})
        CHECK(report.contains(key));
}
