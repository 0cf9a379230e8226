#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/treewidth.hpp"
#include "support.hpp"

using namespace homcsp;

namespace {

// treewidth as the best elimination ordering, by trying all of them
std::size_t treewidth_by_orderings(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::size_t best = n - 1;
    do {
        std::vector<std::uint32_t> adj(n, 0);
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        std::uint32_t alive = (1u << n) - 1;
        std::size_t w = 0;
        for (Vertex v : order) {
            const std::uint32_t nb = adj[v] & alive & ~(1u << v);
            w = std::max<std::size_t>(w, std::popcount(nb));
            for (Vertex x = 0; x < n; ++x)
                if (nb >> x & 1) adj[x] |= nb & ~(1u << x);
            alive &= ~(1u << v);
        }
        best = std::min(best, w);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("validation examples") {
    const Graph p3 = path_graph(3);
    CHECK(validate_decomposition(p3, {{{0, 1, 2}}, {}}).ok);
    CHECK(validate_decomposition(p3, {{{0, 1}, {1, 2}}, {{0, 1}}}).ok);
    const Graph g(3, std::vector<Edge>{{0, 1}, {0, 2}});
    const auto report = validate_decomposition(g, {{{0, 1}, {2}}, {{0, 1}}});
    CHECK_FALSE(report.ok);
    CHECK(report.condition == 3);
    CHECK(report.witness == "{0,2}");
    const auto missing = validate_decomposition(p3, {{{0, 1}}, {}});
    CHECK(missing.condition == 1);
    const auto split = validate_decomposition(p3, {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}});
    CHECK(split.condition == 2);
    CHECK(split.witness == "1");
    CHECK_THROWS_AS(validate_decomposition(p3, {{{0, 1}, {1, 2}}, {}}), InvalidInput);
}

TEST_CASE("width examples") {
    CHECK(width({{{0, 1, 2, 3, 4}}, {}}) == 4);
    TreeDecomposition path;
    for (Vertex v = 0; v + 1 < 6; ++v) {
        path.bags.push_back({v, v + 1});
        if (v > 0) path.tree_edges.emplace_back(v - 1, v);
    }
    CHECK(width(path) == 1);
    CHECK(validate_decomposition(path_graph(6), path).ok);
    CHECK(width(grid_path_decomposition(3, 3)) == 3);
}

TEST_CASE("heuristics on named graphs") {
    for (auto s : {EliminationStrategy::min_degree, EliminationStrategy::min_fill}) {
        const auto t5 = decompose_heuristic(complete_graph(5), s);
        CHECK(validate_decomposition(complete_graph(5), t5).ok);
        CHECK(width(t5) == 4);
        const auto c5 = decompose_heuristic(cycle_graph(5), s);
        CHECK(validate_decomposition(cycle_graph(5), c5).ok);
        CHECK(width(c5) == 2);
        const Graph tree(7, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
        const auto tt = decompose_heuristic(tree, s);
        CHECK(validate_decomposition(tree, tt).ok);
        CHECK(width(tt) == 1);
    }
}

TEST_CASE("exact treewidth examples") {
    CHECK(width(decompose_exact(complete_graph(5))) == 4);
    CHECK(width(decompose_exact(cycle_graph(5))) == 2);
    CHECK(width(decompose_exact(grid_graph(3, 3))) == 3);
    CHECK(width(decompose_exact(complete_graph(4))) == 3);
    CHECK(width(decompose_exact(Graph(5))) == 0);
    CHECK_THROWS_AS(decompose_exact(complete_graph(20), 16), BudgetExceeded);
}

TEST_CASE("exact treewidth agrees with ordering enumeration") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(1 + rng() % 7, 0.45, rng);
        const auto t = decompose_exact(g);
        CHECK(validate_decomposition(g, t).ok);
        CHECK(width(t) == treewidth_by_orderings(g));
        for (auto s : {EliminationStrategy::min_degree, EliminationStrategy::min_fill})
            CHECK(width(decompose_heuristic(g, s)) >= width(t));
    }
}

TEST_CASE("heuristic decompositions are valid on random graphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + rng() % 30, 0.2, rng);
        for (auto s : {EliminationStrategy::min_degree, EliminationStrategy::min_fill})
            CHECK(validate_decomposition(g, decompose_heuristic(g, s)).ok);
    }
}

TEST_CASE("grid and fan grid decompositions") {
    CHECK(width(grid_path_decomposition(1, 7)) == 1);
    CHECK(validate_decomposition(grid_graph(1, 7), grid_path_decomposition(1, 7)).ok);
    CHECK(validate_decomposition(grid_graph(3, 3), grid_path_decomposition(3, 3)).ok);
    const auto big = grid_path_decomposition(8, 28);
    CHECK(validate_decomposition(grid_graph(8, 28), big).ok);
    CHECK(width(big) == 8);
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t r = 1; r <= 5; ++r) {
            const auto t = grid_path_decomposition(k, r);
            CHECK(validate_decomposition(grid_graph(k, r), t).ok);
            if (k > 1 && r > 1) CHECK(width(t) == std::min(k, r));
        }

    const FanGridSpec bare{9, 10, 0, 0, false};
    const auto bare_t = fan_grid_decomposition(bare);
    const auto plain = grid_path_decomposition(9, 10);
    CHECK(bare_t.bags == plain.bags);
    CHECK(bare_t.tree_edges == plain.tree_edges);

    const FanGridSpec spec{8, 28, 2, 1, false};
    const FanGrid l = build_fan_grid(spec);
    const auto t = fan_grid_decomposition(spec);
    CHECK(validate_decomposition(l.graph(), t).ok);
    CHECK(width(t) == 8);
    CHECK(t.node_count() == grid_path_decomposition(8, 28).node_count() + 4 * 2 + 8 * 1);
}

TEST_CASE("decomposition JSON round trip") {
    const auto t = decompose_heuristic(cycle_graph(6), EliminationStrategy::min_fill);
    const auto back = decomposition_from_json(decomposition_to_json(t));
    CHECK(back.bags == t.bags);
    CHECK(back.tree_edges == t.tree_edges);
}
