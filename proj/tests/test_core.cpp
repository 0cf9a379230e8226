#include <doctest.h>

#include <sstream>

#include "homcsp/bigcount.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/io.hpp"
#include "homcsp/structure.hpp"

using namespace homcsp;

TEST_CASE("bigcount arithmetic") {
    CHECK(BigCount::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK(BigCount::pow(BigCount(2), 100).str() == "1267650600228229401496703205376");
    CHECK(BigCount::factorial(10) == BigCount(3628800));
    CHECK(BigCount(7) / BigCount(2) == BigCount(3));
    CHECK(BigCount(7) % BigCount(2) == BigCount(1));
    CHECK(round_div(BigCount(7), BigCount(2)) == BigCount(4));
    CHECK(round_div(BigCount(5), BigCount(3)) == BigCount(2));
    CHECK(round_div(BigCount(4), BigCount(3)) == BigCount(1));
    CHECK_THROWS_AS((void)(BigCount(1) - BigCount(2)), InvalidInput);
    CHECK_THROWS_AS((void)(BigCount(1) / BigCount(0)), InvalidInput);
    CHECK_THROWS_AS(BigCount::parse("-3"), InvalidInput);
    CHECK_THROWS_AS(BigCount::parse("12a"), InvalidInput);
    CHECK(BigCount(UINT64_MAX).to_u64() == UINT64_MAX);
    CHECK_FALSE((BigCount(UINT64_MAX) + BigCount(1)).fits_u64());
}

TEST_CASE("graph canonical storage") {
    const Graph g(4, std::vector<Edge>{{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 3});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), InvalidInput);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(bipartition(cycle_graph(4)).size() == 4);
    CHECK(bipartition(cycle_graph(5)).empty());
}

TEST_CASE("structure_size examples") {
    const RelationalStructure empty(Signature({{"E", 2}}), 0, {});
    CHECK(structure_size(empty) == 1);
    CHECK(structure_size(graph_as_structure(complete_graph(3))) == 16);
    const RelationalStructure unary(Signature({{"U", 1}}), 1, {{"U", {{0}}}});
    CHECK(structure_size(unary) == 3);
}

TEST_CASE("structure_size is monotone under adding tuples") {
    std::map<std::string, std::set<Tuple>> rel{{"R", {}}};
    std::size_t previous = structure_size(RelationalStructure(Signature({{"R", 3}}), 4, rel));
    for (Vertex a = 0; a < 4; ++a) {
        rel["R"].insert({a, static_cast<Vertex>((a + 1) % 4), a});
        const std::size_t now = structure_size(RelationalStructure(Signature({{"R", 3}}), 4, rel));
        CHECK(now > previous);
        previous = now;
    }
}

TEST_CASE("is_homomorphism") {
    const auto k3 = graph_as_structure(complete_graph(3));
    const std::vector<Vertex> id{0, 1, 2};
    CHECK(is_homomorphism(k3, k3, id));
    const auto k2 = graph_as_structure(complete_graph(2));
    const auto k1 = graph_as_structure(Graph(1));
    const std::vector<Vertex> constant{0, 0};
    CHECK_FALSE(is_homomorphism(k2, k1, constant));
    const RelationalStructure other(Signature({{"F", 2}}), 2, {});
    CHECK_THROWS_AS(is_homomorphism(k2, other, constant), InvalidInput);
    const std::vector<Vertex> partial{0};
    CHECK_THROWS_AS(is_homomorphism(k2, k2, partial), InvalidInput);
}

TEST_CASE("structure and graph homomorphism checks agree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph a = random_graph(5, 0.5, rng);
        const Graph b = random_graph(4, 0.6, rng);
        std::vector<Vertex> map(5);
        for (auto& x : map) x = static_cast<Vertex>(rng() % 4);
        bool by_edges = true;
        for (const auto& [u, v] : a.edges()) by_edges = by_edges && b.has_edge(map[u], map[v]);
        CHECK(is_homomorphism(graph_as_structure(a), graph_as_structure(b), map) == by_edges);
        CHECK(is_graph_homomorphism(a, b, map) == by_edges);
    }
}

TEST_CASE("gaifman graph") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(7, 0.4, rng);
        CHECK(gaifman_graph(graph_as_structure(g)) == g);
    }
    const RelationalStructure tri(Signature({{"T", 3}}), 3, {{"T", {{0, 1, 2}}}});
    CHECK(gaifman_graph(tri) == complete_graph(3));
    const RelationalStructure two(Signature({{"E", 2}}), 4, {{"E", {{0, 1}, {2, 3}}}});
    CHECK(gaifman_graph(two) == Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST_CASE("graph_as_structure") {
    const auto k2 = graph_as_structure(complete_graph(2));
    CHECK(k2.relation(kEdgeSymbol) == std::set<Tuple>{{0, 1}, {1, 0}});
    const auto empty = graph_as_structure(Graph(3));
    CHECK(empty.universe_size() == 3);
    CHECK(empty.relation(kEdgeSymbol).empty());
    CHECK(graph_as_structure(cycle_graph(4)).relation(kEdgeSymbol).size() == 8);
}

TEST_CASE("edge list and JSON round trips") {
    const Graph g = cycle_graph(5);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
    std::stringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), InvalidInput);
    const RelationalStructure s(Signature({{"R", 3}, {"U", 1}}), 4, {{"R", {{0, 1, 1}, {2, 3, 2}}}, {"U", {{3}}}});
    CHECK(structure_from_json(structure_to_json(s)) == s);
    std::stringstream dot;
    write_dot(dot, g);
    CHECK(dot.str().find("0 -- 1") != std::string::npos);
}

TEST_CASE("leading zeros are decimal") {
    CHECK(BigCount::parse("0025") == BigCount(25));
}
