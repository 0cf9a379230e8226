#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "homcsp/bigcount.hpp"
#include "homcsp/graph.hpp"

namespace homcsp {

/// Each vertex v becomes s copies v_0..v_{s-1} (id v*s + i); every edge vw
/// becomes a complete bipartite K_{s,s}.
Graph blowup_Gs(const Graph& g, std::size_t s);

/// The same replacement, used to push nonzero clique counts above a
/// threshold in the parameter-lift step.
Graph blowup_Gk(const Graph& g, std::size_t t);

/// G plus s new vertices (ids n..n+s-1), each adjacent to every old vertex
/// and to none of the other new vertices.
Graph add_universal_vertices(const Graph& g, std::size_t s);

inline constexpr std::uint64_t kDefaultCliqueBudget = 2'000'000'000ULL;

/// Number of k-vertex cliques. BudgetExceeded when the search visits more
/// than `budget` partial cliques.
BigCount count_cliques_bruteforce(const Graph& g, std::size_t k,
                                  std::uint64_t budget = kDefaultCliqueBudget);

/// A graph whose vertices are grouped into classes of pairwise non-adjacent
/// twins. Blow-ups and universal-vertex steps stay small in this form, so
/// clique counts of very large amplified graphs remain exact and cheap.
class CompressedGraph {
public:
    CompressedGraph() = default;
    /// Every vertex in its own class.
    explicit CompressedGraph(const Graph& g);
    /// `quotient` joins classes that are completely joined; sizes >= 1.
    CompressedGraph(Graph quotient, std::vector<BigCount> sizes);

    const Graph& quotient() const { return quotient_; }
    const std::vector<BigCount>& class_sizes() const { return sizes_; }

    BigCount vertex_count() const;
    BigCount edge_count() const;

    CompressedGraph blowup(const BigCount& t) const;
    CompressedGraph add_universal(const BigCount& s) const;
    CompressedGraph add_isolated_edge() const;

    /// Sum over k-cliques of the quotient of the product of class sizes.
    BigCount count_cliques(std::size_t k) const;

    /// Plain graph (classes expanded in order); BudgetExceeded above max_vertices.
    Graph materialize(std::size_t max_vertices = 100'000) const;

private:
    Graph quotient_;
    std::vector<BigCount> sizes_;
};

}  // namespace homcsp
