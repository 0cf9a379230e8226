#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace homcsp {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loop-free graph on vertices 0..n-1. Immutable once
/// built; edges are stored once each as (min, max), sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Duplicate edges and either orientation are accepted and merged.
    /// Loops or out-of-range endpoints throw InvalidInput.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, const std::vector<Edge>& edges)
        : Graph(n, std::span<const Edge>(edges)) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Two-colouring if the graph is bipartite (colour per vertex), empty otherwise.
std::vector<int> bipartition(const Graph& g);

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Erdos-Renyi G(n, p) drawn from `rng`.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace homcsp
