#include <algorithm>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/treewidth.hpp"

namespace homcsp {

namespace {

void check_tree(const TreeDecomposition& t) {
    const std::size_t n = t.node_count();
    if (n == 0) {
        if (!t.tree_edges.empty()) throw InvalidInput("tree edges without tree nodes");
        return;
    }
    if (t.tree_edges.size() != n - 1)
        throw InvalidInput("decomposition is not a tree: " + std::to_string(n) + " nodes, " +
                           std::to_string(t.tree_edges.size()) + " edges");
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : t.tree_edges) {
        if (a >= n || b >= n) throw InvalidInput("tree edge references missing node");
        const std::size_t ra = find(a), rb = find(b);
        if (ra == rb) throw InvalidInput("decomposition is not a tree: cycle through nodes " +
                                         std::to_string(a) + " and " + std::to_string(b));
        parent[ra] = rb;
    }
}

}  // namespace

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& t) {
    check_tree(t);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> holders(n);
    for (std::size_t b = 0; b < t.node_count(); ++b) {
        for (Vertex v : t.bags[b]) {
            if (v >= n) throw InvalidInput("bag " + std::to_string(b) + " mentions vertex " + std::to_string(v) +
                                           " outside the graph");
            holders[v].push_back(b);
        }
    }
    DecompositionReport report;
    for (Vertex v = 0; v < n; ++v) {
        if (holders[v].empty()) return {false, 1, std::to_string(v)};
    }
    std::vector<char> in(t.node_count(), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t b : holders[v]) in[b] = 1;
        std::size_t inner = 0;
        for (const auto& [a, b] : t.tree_edges) inner += in[a] && in[b];
        for (std::size_t b : holders[v]) in[b] = 0;
        // a subforest of a tree is connected iff it has |nodes| - 1 edges
        if (inner + 1 != holders[v].size()) return {false, 2, std::to_string(v)};
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (std::size_t b : holders[u]) {
            if (std::find(t.bags[b].begin(), t.bags[b].end(), v) != t.bags[b].end()) {
                covered = true;
                break;
            }
        }
        if (!covered) return {false, 3, "{" + std::to_string(u) + "," + std::to_string(v) + "}"};
    }
    return report;
}

std::size_t width(const TreeDecomposition& t) {
    if (t.node_count() == 0) throw InvalidInput("width of an empty decomposition is undefined");
    std::size_t largest = 0;
    for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
    return largest == 0 ? 0 : largest - 1;
}

nlohmann::json decomposition_to_json(const TreeDecomposition& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : t.tree_edges) edges.push_back({a, b});
    return {{"nodes", t.node_count()}, {"tree_edges", edges}, {"bags", t.bags}};
}

TreeDecomposition decomposition_from_json(const nlohmann::json& j) {
    try {
        TreeDecomposition t;
        const std::size_t nodes = j.at("nodes").get<std::size_t>();
        t.bags = j.at("bags").get<std::vector<std::vector<Vertex>>>();
        if (t.bags.size() != nodes) throw InvalidInput("\"nodes\" does not match number of bags");
        for (auto& bag : t.bags) {
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        }
        for (const auto& e : j.at("tree_edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("tree edge must be a pair");
            t.tree_edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        check_tree(t);
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("malformed decomposition JSON: ") + ex.what());
    }
}

}  // namespace homcsp
