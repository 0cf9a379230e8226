#include <doctest.h>

#include <random>

#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/minor.hpp"
#include "homcsp/pair_index.hpp"
#include "support.hpp"

using namespace homcsp;

TEST_CASE("fan grid census") {
    const FanGrid l = build_fan_grid({8, 28, 2, 1, false});
    CHECK(l.graph().vertex_count() == 240);
    // independent count of grid edges straight from coordinates
    std::size_t grid_edges = 0, leaf_edges = 0;
    for (const auto& [a, b] : l.graph().edges()) {
        if (l.is_grid_vertex(a) && l.is_grid_vertex(b)) {
            const Cell x = l.coord(a), y = l.coord(b);
            CHECK(std::abs(x.i - y.i) + std::abs(x.p - y.p) == 1);
            ++grid_edges;
        } else {
            ++leaf_edges;
        }
    }
    CHECK(grid_edges == 8 * 27 + 28 * 7);
    CHECK(leaf_edges == 16);
    CHECK(l.graph().edge_count() == 428);
    for (std::size_t j = 0; j < 12; ++j) {
        CHECK(l.fan_set(j).size() == (j < 4 ? 2u : 1u));
        for (Vertex w : l.fan_set(j)) {
            CHECK(l.graph().degree(w) == 1);
            CHECK(l.graph().has_edge(w, l.fan_vertex(j)));
        }
    }
    CHECK(l.corner_vertices().size() == 4);
}

TEST_CASE("fan grid without leaves is the bare grid") {
    CHECK(build_fan_grid({9, 10, 0, 0, false}).graph() == grid_graph(9, 10));
}

TEST_CASE("fan grid refusals") {
    CHECK_THROWS_AS(build_fan_grid({8, 6, 1, 1, false}), InvalidInput);
    CHECK_THROWS_AS(build_fan_grid({5, 10, 1, 1, true}), InvalidInput);  // u9 = u11
    CHECK_NOTHROW(build_fan_grid({6, 15, 1, 1, true}));
    CHECK_THROWS_AS(FanGrid(3, 3, {{{1, 1}, 1}, {{1, 1}, 1}}), InvalidInput);
    CHECK_THROWS_AS(FanGrid(3, 3, {{{4, 1}, 1}}), InvalidInput);
}

TEST_CASE("pair index") {
    const PairIndex k4(4);
    using P = std::pair<std::size_t, std::size_t>;
    const std::vector<P> expected{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (std::size_t p = 1; p <= 6; ++p) CHECK(k4.rho(p) == expected[p - 1]);
    for (std::size_t k = 2; k <= 10; ++k) {
        const PairIndex idx(k);
        CHECK(idx.r() == k * (k - 1) / 2);
        for (std::size_t p = 1; p <= idx.r(); ++p) {
            const auto [a, b] = idx.rho(p);
            CHECK(idx.rho_inv(a, b) == p);
            CHECK(idx.rho_inv(b, a) == p);
        }
        for (std::size_t i = 1; i <= k; ++i) {
            std::size_t occurrences = 0;
            for (std::size_t p = 1; p <= idx.r(); ++p) occurrences += idx.contains(p, i);
            CHECK(occurrences == k - 1);
        }
    }
    CHECK_THROWS_AS(k4.rho_inv(2, 2), InvalidInput);
}

TEST_CASE("H graph of K4 at k = 4") {
    const Graph k4 = complete_graph(4);
    const BigCount w2(196), w1(38416);
    const HGraph h = build_h_graph(k4, 4, w1, w2);
    CHECK(h.r() == 6);
    CHECK(h.h1_size() == 288);
    CHECK(h1_census(BigCount(4), BigCount(6), 4) == BigCount(288));
    const DegreeAudit audit = audit_degrees(h);
    CHECK(audit.ok);
    CHECK(audit.corner_vertices > 0);
    CHECK(audit.other_fan_vertices > 0);
    for (Vertex x = 0; x < h.h1_size(); ++x)
        if (h.is_corner_labelled(x)) CHECK(h.degree(x) == w1);

    // membership and edge rules checked label by label
    const auto& src = h.source();
    for (Vertex x = 0; x < h.h1_size(); ++x) {
        const auto& a = h.label(x);
        const auto& e = src.edges()[a.e];
        const bool v_in_e = e.first == a.v || e.second == a.v;
        CHECK(v_in_e == h.pair_index().contains(a.p, a.i));
    }
    std::size_t expected_edges = 0;
    for (Vertex x = 0; x < h.h1_size(); ++x)
        for (Vertex y = x + 1; y < h.h1_size(); ++y) {
            const auto& a = h.label(x);
            const auto& b = h.label(y);
            const bool vertical = a.e == b.e && a.p == b.p && (a.i + 1 == b.i || b.i + 1 == a.i);
            const bool horizontal = a.v == b.v && a.i == b.i && (a.p + 1 == b.p || b.p + 1 == a.p);
            if (vertical || horizontal) {
                ++expected_edges;
                CHECK(h.h1().has_edge(x, y));
            }
        }
    CHECK(h.h1().edge_count() == expected_edges);
}

TEST_CASE("materialized H matches degree metadata") {
    const Graph g = complete_graph(3);
    for (auto policy : {PaddingPolicy::nested_prefix, PaddingPolicy::rotating}) {
        const HGraph h = build_h_graph(g, 3, BigCount(40), BigCount(25), policy);
        const Graph full = h.materialize();
        CHECK(full.vertex_count() == h.materialized_vertex_count());
        for (Vertex x = 0; x < h.h1_size(); ++x) CHECK(BigCount(full.degree(x)) == h.degree(x));
        CHECK(audit_degrees(h).ok);
        // class members attach only to fan vertices carrying that role
        for (std::size_t j = 0; j < 12; ++j) {
            const Vertex first = static_cast<Vertex>(h.class_offset(j));
            for (Vertex y : full.neighbors(first)) CHECK(h.fan_role(y) == static_cast<int>(j));
        }
    }
}

TEST_CASE("H graph refusals") {
    CHECK_THROWS_AS(build_h_graph(Graph(4), 4, BigCount(100), BigCount(50)), InvalidInput);
    CHECK_THROWS_AS(build_h_graph(complete_graph(4), 4, BigCount(2), BigCount(2)), InvalidInput);
}

TEST_CASE("clique counter against bitmask oracle") {
    CHECK(count_cliques_bruteforce(complete_graph(5), 4) == BigCount(5));
    CHECK(count_cliques_bruteforce(cycle_graph(5), 3) == BigCount(0));
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(7, 0.5, rng);
        for (std::size_t k = 0; k <= 5; ++k)
            CHECK(count_cliques_bruteforce(g, k) == BigCount(testing::cliques_by_bitmask(g, k)));
    }
    CHECK_THROWS_AS(count_cliques_bruteforce(complete_graph(30), 15, 1000), BudgetExceeded);
}

TEST_CASE("blow-up examples") {
    CHECK(count_cliques_bruteforce(blowup_Gs(complete_graph(3), 2), 3) == BigCount(8));
    CHECK(count_cliques_bruteforce(blowup_Gk(complete_graph(3), 2), 3) == BigCount(8));
    CHECK(blowup_Gs(cycle_graph(5), 1) == cycle_graph(5));
    CHECK(blowup_Gk(cycle_graph(5), 1) == cycle_graph(5));
    CHECK(blowup_Gs(Graph(4), 3).edge_count() == 0);
    CHECK(count_cliques_bruteforce(add_universal_vertices(complete_graph(4), 2), 4) == BigCount(9));
    CHECK(count_cliques_bruteforce(add_universal_vertices(Graph(5), 3), 2) == BigCount(15));
    CHECK_THROWS_AS(add_universal_vertices(complete_graph(3), 0), InvalidInput);
}

TEST_CASE("blow-up identities on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(1 + rng() % 6, 0.5, rng);
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t k = 2; k <= 4; ++k) {
                const BigCount n = count_cliques_bruteforce(g, k);
                const BigCount sk = BigCount::pow(BigCount(s), k);
                CHECK(count_cliques_bruteforce(blowup_Gs(g, s), k) == sk * n);
                CHECK(count_cliques_bruteforce(blowup_Gk(g, s), k) == sk * n);
                CHECK(count_cliques_bruteforce(add_universal_vertices(g, s), k + 1) ==
                      BigCount(s) * n + count_cliques_bruteforce(g, k + 1));
            }
    }
}

TEST_CASE("compressed graph agrees with materialized counts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(5, 0.6, rng);
        const CompressedGraph c = CompressedGraph(g).blowup(BigCount(2)).add_universal(BigCount(2)).add_isolated_edge();
        const Graph full = c.materialize();
        CHECK(BigCount(full.vertex_count()) == c.vertex_count());
        CHECK(BigCount(full.edge_count()) == c.edge_count());
        for (std::size_t k = 1; k <= 5; ++k) CHECK(c.count_cliques(k) == count_cliques_bruteforce(full, k));
    }
}

TEST_CASE("fan grid minor models") {
    const MinorModel m = fan_grid_minor_model(8, 28, 2, 1);
    CHECK(m.host_rows == 12);
    CHECK(m.host_cols == 32);
    CHECK(validate_minor_model(m.host, m.pattern, m.branch_sets).ok);
    const MinorModel bare = fan_grid_minor_model(8, 10, 0, 0);
    CHECK(bare.host_rows == 8);
    CHECK(bare.host_cols == 10);
    for (std::size_t v = 0; v < bare.branch_sets.size(); ++v)
        CHECK(bare.branch_sets[v] == std::vector<Vertex>{static_cast<Vertex>(v)});
    for (std::size_t k = 8; k <= 10; ++k)
        for (std::size_t r : {8, 10, 28})
            for (std::size_t l1 = 0; l1 <= 3; ++l1)
                for (std::size_t l2 = 0; l2 <= 3; ++l2) {
                    const MinorModel mm = fan_grid_minor_model(k, r, l1, l2);
                    CHECK(mm.pattern == build_fan_grid({k, r, l1, l2, false}).graph());
                    CHECK(validate_minor_model(mm.host, mm.pattern, mm.branch_sets).ok);
                }
}

TEST_CASE("minor validator violations") {
    const Graph g = cycle_graph(4);
    std::vector<std::vector<Vertex>> id{{0}, {1}, {2}, {3}};
    CHECK(validate_minor_model(g, g, id).ok);
    auto overlap = id;
    overlap[1] = {0, 1};
    const MinorReport r1 = validate_minor_model(g, g, overlap);
    CHECK_FALSE(r1.ok);
    CHECK(r1.violation == "overlap");
    auto disconnected = id;
    disconnected[0] = {0, 2};
    disconnected[2] = {};
    CHECK(validate_minor_model(g, g, disconnected).violation == "empty");
    const MinorReport r3 = validate_minor_model(path_graph(4), g, id);
    CHECK(r3.violation == "missing_edge");
    const MinorReport r4 = validate_minor_model(path_graph(4), path_graph(2), {{0, 2}, {1}});
    CHECK(r4.violation == "disconnected");
}
