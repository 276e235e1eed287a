#include <doctest.h>

#include "kindep/constructions.hpp"
#include "kindep/error.hpp"
#include "kindep/graph_io.hpp"
#include "kindep/random_graph.hpp"
#include "support/oracles.hpp"

using namespace kindep;

TEST_CASE("graph6 known encodings") {
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(complete_graph(2)) == "A_");
    // P_3: bits for pairs (0,1),(0,2),(1,2) are 1,0,1 -> 101000b = 40, 40+63 = 'g'
    CHECK(write_graph6(path_graph(3)) == "Bg");
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6("A_\n") == complete_graph(2));

    const auto g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    CHECK(write_graph6(g) == "D?{");
}

TEST_CASE("graph6 rejects malformed input with an offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);   // too short
    CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError); // too long
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);   // nonzero padding

    std::string bad = "D?{";
    bad[1] = 62;
    try {
        parse_graph6(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_graph6(std::string(1, static_cast<char>(62))), ParseError);
}

TEST_CASE("graph6 extended size headers") {
    const auto g = subdivided_star(5, 30);  // 91 vertices
    const auto text = write_graph6(g);
    CHECK(text[0] == '~');
    CHECK(parse_graph6(text) == g);

    CHECK(write_graph6(Graph(62))[0] == static_cast<char>(62 + 63));
    CHECK(write_graph6(Graph(63)).substr(0, 4) == "~??~");
    CHECK(parse_graph6(write_graph6(cycle_graph(63))) == cycle_graph(63));
}

TEST_CASE("property: graph6 round trips both ways") {
    for (const auto& g : testing::random_corpus(200, 40, 5)) {
        const auto text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(write_graph6(parse_graph6(text)) == text);
    }
    for (const auto& g : testing::all_graphs(5)) CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("edge list text") {
    const auto g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(write_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse_graph_text("# comment\n4 3\n0 1\n1 2\n2 3\n") == g);
    CHECK(parse_graph_text("Bg\n") == path_graph(3));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), PreconditionError);
    for (const auto& h : testing::random_corpus(30, 14, 77)) CHECK(parse_edge_list(write_edge_list(h)) == h);
}

TEST_CASE("dot export") {
    const auto k2 = to_dot(complete_graph(2));
    CHECK(k2.find("0 -- 1") != std::string::npos);

    auto count = [](const std::string& s, const std::string& needle) {
        std::size_t c = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
        return c;
    };
    const auto empty2 = to_dot(Graph(2));
    CHECK(count(empty2, "--") == 0);
    CHECK(empty2.find("  0;") != std::string::npos);
    CHECK(empty2.find("  1;") != std::string::npos);
    CHECK(count(to_dot(cycle_graph(3)), "--") == 3);

    const auto labelled = to_dot(path_graph(2), std::map<Vertex, std::string>{{0, "seed"}});
    CHECK(labelled.find("0 [label=\"seed\"]") != std::string::npos);
}
