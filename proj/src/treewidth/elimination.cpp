#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/treewidth.hpp"

namespace homcsp {

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw InvalidInput("elimination ordering must list every vertex once");
    std::vector<std::size_t> position(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        if (order[t] >= n || position[order[t]] != n) throw InvalidInput("elimination ordering is not a permutation");
        position[order[t]] = t;
    }
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    // node t holds order[t] and its later neighbours in the filled graph
    std::vector<std::size_t> parent(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        const Vertex v = order[t];
        std::vector<Vertex> later(adj[v].begin(), adj[v].end());
        for (Vertex a : later) {
            adj[a].erase(v);
            for (Vertex b : later)
                if (a != b) adj[a].insert(b);
        }
        std::vector<Vertex> bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        std::size_t next = n;
        for (Vertex a : later) next = std::min(next, position[a]);
        parent[t] = next;
    }
    std::size_t previous_root = n;
    for (std::size_t t = 0; t < n; ++t) {
        if (parent[t] < n) {
            td.tree_edges.emplace_back(parent[t], t);
        } else {
            // roots of different components have disjoint bags; chain them
            if (previous_root < n) td.tree_edges.emplace_back(previous_root, t);
            previous_root = t;
        }
    }
    return td;
}

TreeDecomposition decompose_heuristic(const Graph& g, EliminationStrategy strategy) {
    const std::size_t n = g.vertex_count();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    auto fill_in = [&](Vertex v) {
        std::size_t missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++missing;
        return missing;
    };
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_score = std::numeric_limits<std::size_t>::max();
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            const std::size_t score = strategy == EliminationStrategy::min_degree ? adj[v].size() : fill_in(v);
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        gone[best] = true;
        order.push_back(best);
        const std::vector<Vertex> nbrs(adj[best].begin(), adj[best].end());
        for (Vertex a : nbrs) {
            adj[a].erase(best);
            for (Vertex b : nbrs)
                if (a != b) adj[a].insert(b);
        }
        adj[best].clear();
    }
    return decomposition_from_ordering(g, order);
}

TreeDecomposition decompose_exact(const Graph& g, std::size_t max_n) {
    const std::size_t n = g.vertex_count();
    if (n > max_n || n > 24)
        throw BudgetExceeded("exact treewidth limited to " + std::to_string(std::min<std::size_t>(max_n, 24)) +
                           " vertices, graph has " + std::to_string(n));
    if (n == 0) return decomposition_from_ordering(g, {});
    using Mask = std::uint32_t;
    std::vector<Mask> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= Mask{1} << v;
        nbr[v] |= Mask{1} << u;
    }
    // q(S, v): vertices outside S + v reachable from v through S
    auto q = [&](Mask s, std::size_t v) {
        Mask seen = Mask{1} << v, frontier = seen, reach = 0;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
            next &= ~seen;
            seen |= next;
            reach |= next & ~s;
            frontier = next & s;
        }
        return static_cast<std::size_t>(std::popcount(reach));
    };
    const std::size_t full = std::size_t{1} << n;
    constexpr std::uint8_t kUnset = 0xff;
    std::vector<std::uint8_t> tw(full, kUnset);
    std::vector<std::uint8_t> last(full, 0);
    tw[0] = 0;
    for (std::size_t s = 1; s < full; ++s) {
        std::uint8_t best = kUnset;
        for (Mask rest = static_cast<Mask>(s); rest; rest &= rest - 1) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            const Mask prev = static_cast<Mask>(s) & ~(Mask{1} << v);
            const auto value = static_cast<std::uint8_t>(std::max<std::size_t>(tw[prev], q(prev, v)));
            if (value < best) {
                best = value;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
        tw[s] = best;
    }
    std::vector<Vertex> order(n);
    Mask s = static_cast<Mask>(full - 1);
    for (std::size_t t = n; t-- > 0;) {
        order[t] = last[s];
        s &= ~(Mask{1} << last[s]);
    }
    return decomposition_from_ordering(g, order);
}

}  // namespace homcsp
