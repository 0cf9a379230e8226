#include "homcsp/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "homcsp/errors.hpp"

namespace homcsp {

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n > std::numeric_limits<Vertex>::max())
        throw InvalidInput("graph too large for 32-bit vertex ids");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
        if (u == v)
            throw InvalidInput("loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        return false;
    auto nb = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
    Vertex other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return Graph(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u)
        e.emplace_back(u, u + 1);
    return Graph(n, e);
}

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    return {};
                }
            }
        }
    }
    return colour;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    dist[source] = 0;
    std::queue<Vertex> q;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace homcsp
