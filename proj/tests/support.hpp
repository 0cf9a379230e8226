#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "homcsp/graph.hpp"

namespace homcsp::testing {

/// All graphs on n vertices up to isomorphism, by minimizing the edge
/// bitmask over vertex permutations.
inline std::vector<Graph> all_graphs_up_to_iso(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    auto slot_of = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        // index of (a, b) in lexicographic order
        return static_cast<std::size_t>(a * (2 * n - a - 1) / 2 + (b - a - 1));
    };
    std::vector<std::vector<std::size_t>> perm_maps;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::size_t> map(slots.size());
        for (std::size_t e = 0; e < slots.size(); ++e) map[e] = slot_of(perm[slots[e].first], perm[slots[e].second]);
        perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::uint32_t best = mask;
        for (const auto& map : perm_maps) {
            std::uint32_t image = 0;
            for (std::uint32_t m = mask; m; m &= m - 1) image |= std::uint32_t{1} << map[std::countr_zero(m)];
            best = std::min(best, image);
            if (best < mask) break;
        }
        if (best != mask) continue;
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (mask >> e & 1U) edges.push_back(slots[e]);
        out.emplace_back(n, edges);
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == SIZE_MAX; });
}

/// Independent clique counter over vertex subsets (n <= 20).
inline std::uint64_t cliques_by_bitmask(const Graph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
        bool clique = true;
        for (std::uint32_t a = s; a && clique; a &= a - 1)
            for (std::uint32_t b = a & (a - 1); b; b &= b - 1)
                if (!g.has_edge(static_cast<Vertex>(std::countr_zero(a)), static_cast<Vertex>(std::countr_zero(b)))) {
                    clique = false;
                    break;
                }
        count += clique;
    }
    return count;
}

}  // namespace homcsp::testing
