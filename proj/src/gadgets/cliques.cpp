#include "homcsp/cliques.hpp"

#include <string>

#include "homcsp/errors.hpp"

namespace homcsp {

namespace {

Graph blowup(const Graph& g, std::size_t s) {
    if (s == 0) throw InvalidInput("blow-up factor must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * s * s);
    for (const auto& [v, w] : g.edges())
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b)
                edges.emplace_back(static_cast<Vertex>(v * s + a), static_cast<Vertex>(w * s + b));
    return Graph(g.vertex_count() * s, edges);
}

// Weighted clique enumeration: every clique contributes the product of the
// weights of its vertices.
struct CliqueSearch {
    const Graph& g;
    const std::vector<BigCount>* weights;
    std::size_t k;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    BigCount total;

    void extend(const std::vector<Vertex>& candidates, std::size_t depth, const BigCount& product) {
        if (++visited > budget)
            throw BudgetExceeded("clique enumeration exceeded budget of " + std::to_string(budget) + " nodes");
        if (depth == k) {
            total += product;
            return;
        }
        if (candidates.size() < k - depth) return;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Vertex v = candidates[a];
            std::vector<Vertex> next;
            for (std::size_t b = a + 1; b < candidates.size(); ++b)
                if (g.has_edge(v, candidates[b])) next.push_back(candidates[b]);
            extend(next, depth + 1, weights ? product * (*weights)[v] : product);
        }
    }
};

BigCount count_weighted_cliques(const Graph& g, const std::vector<BigCount>* weights, std::size_t k,
                                std::uint64_t budget) {
    if (k == 0) return BigCount(1);
    CliqueSearch search{g, weights, k, budget, 0, BigCount(0)};
    std::vector<Vertex> all(g.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
    search.extend(all, 0, BigCount(1));
    return search.total;
}

}  // namespace

Graph blowup_Gs(const Graph& g, std::size_t s) { return blowup(g, s); }

Graph blowup_Gk(const Graph& g, std::size_t t) { return blowup(g, t); }

Graph add_universal_vertices(const Graph& g, std::size_t s) {
    if (s == 0) throw InvalidInput("number of universal vertices must be at least 1");
    std::vector<Edge> edges = g.edges();
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(n + a));
    return Graph(n + s, edges);
}

BigCount count_cliques_bruteforce(const Graph& g, std::size_t k, std::uint64_t budget) {
    return count_weighted_cliques(g, nullptr, k, budget);
}

CompressedGraph::CompressedGraph(const Graph& g) : quotient_(g), sizes_(g.vertex_count(), BigCount(1)) {}

CompressedGraph::CompressedGraph(Graph quotient, std::vector<BigCount> sizes)
    : quotient_(std::move(quotient)), sizes_(std::move(sizes)) {
    if (sizes_.size() != quotient_.vertex_count()) throw InvalidInput("one size per class required");
    for (const auto& s : sizes_)
        if (s.is_zero()) throw InvalidInput("twin classes must be nonempty");
}

BigCount CompressedGraph::vertex_count() const {
    BigCount total;
    for (const auto& s : sizes_) total += s;
    return total;
}

BigCount CompressedGraph::edge_count() const {
    BigCount total;
    for (const auto& [a, b] : quotient_.edges()) total += sizes_[a] * sizes_[b];
    return total;
}

CompressedGraph CompressedGraph::blowup(const BigCount& t) const {
    if (t.is_zero()) throw InvalidInput("blow-up factor must be at least 1");
    std::vector<BigCount> sizes = sizes_;
    for (auto& s : sizes) s *= t;
    return CompressedGraph(quotient_, std::move(sizes));
}

CompressedGraph CompressedGraph::add_universal(const BigCount& s) const {
    if (s.is_zero()) throw InvalidInput("number of universal vertices must be at least 1");
    const std::size_t c = quotient_.vertex_count();
    std::vector<Edge> edges = quotient_.edges();
    for (std::size_t v = 0; v < c; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(c));
    std::vector<BigCount> sizes = sizes_;
    sizes.push_back(s);
    return CompressedGraph(Graph(c + 1, edges), std::move(sizes));
}

CompressedGraph CompressedGraph::add_isolated_edge() const {
    const std::size_t c = quotient_.vertex_count();
    std::vector<Edge> edges = quotient_.edges();
    edges.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(c + 1));
    std::vector<BigCount> sizes = sizes_;
    sizes.emplace_back(1);
    sizes.emplace_back(1);
    return CompressedGraph(Graph(c + 2, edges), std::move(sizes));
}

BigCount CompressedGraph::count_cliques(std::size_t k) const {
    return count_weighted_cliques(quotient_, &sizes_, k, kDefaultCliqueBudget);
}

Graph CompressedGraph::materialize(std::size_t max_vertices) const {
    const BigCount total = vertex_count();
    if (total > BigCount(max_vertices))
        throw BudgetExceeded("compressed graph expands to " + total.str() + " vertices, budget " +
                             std::to_string(max_vertices));
    std::vector<std::size_t> offset(sizes_.size() + 1, 0);
    for (std::size_t c = 0; c < sizes_.size(); ++c) offset[c + 1] = offset[c] + sizes_[c].to_u64();
    std::vector<Edge> edges;
    for (const auto& [a, b] : quotient_.edges())
        for (std::size_t x = offset[a]; x < offset[a + 1]; ++x)
            for (std::size_t y = offset[b]; y < offset[b + 1]; ++y)
                edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    return Graph(offset.back(), edges);
}

}  // namespace homcsp
