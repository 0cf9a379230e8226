#include <algorithm>
#include <string>
#include <unordered_set>

#include "homcsp/errors.hpp"
#include "homcsp/homcount.hpp"

namespace homcsp {

namespace {

enum class Kind { leaf, introduce, forget, join };

struct NiceNode {
    Kind kind = Kind::leaf;
    std::vector<Vertex> bag;  // sorted
    Vertex vertex = 0;        // introduced or forgotten vertex
    std::size_t left = 0, right = 0;
};

// Children are created before parents, so nodes are already in post-order.
class NiceBuilder {
public:
    std::vector<NiceNode> nodes;

    std::size_t leaf() {
        nodes.push_back({Kind::leaf, {}, 0, 0, 0});
        return nodes.size() - 1;
    }
    std::size_t introduce(std::size_t child, Vertex v) {
        auto bag = nodes[child].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        nodes.push_back({Kind::introduce, std::move(bag), v, child, 0});
        return nodes.size() - 1;
    }
    std::size_t forget(std::size_t child, Vertex v) {
        auto bag = nodes[child].bag;
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        nodes.push_back({Kind::forget, std::move(bag), v, child, 0});
        return nodes.size() - 1;
    }
    std::size_t join(std::size_t a, std::size_t b) {
        nodes.push_back({Kind::join, nodes[a].bag, 0, a, b});
        return nodes.size() - 1;
    }
    // Forget, then introduce, until the bag equals `target`.
    std::size_t morph(std::size_t from, const std::vector<Vertex>& target) {
        const auto current = nodes[from].bag;
        for (Vertex v : current)
            if (!std::binary_search(target.begin(), target.end(), v)) from = forget(from, v);
        for (Vertex v : target)
            if (!std::binary_search(current.begin(), current.end(), v)) from = introduce(from, v);
        return from;
    }
};

std::vector<NiceNode> make_nice(const TreeDecomposition& t) {
    NiceBuilder b;
    const std::size_t n = t.node_count();
    std::vector<std::vector<Vertex>> bags = t.bags;
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [x, y] : t.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    // iterative DFS from node 0; post-order assembly
    std::vector<std::size_t> parent(n, n), order;
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (std::size_t y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<std::size_t> built(n, SIZE_MAX);
    for (std::size_t idx = order.size(); idx-- > 0;) {
        const std::size_t x = order[idx];
        std::size_t acc = SIZE_MAX;
        for (std::size_t y : adj[x]) {
            if (parent[y] != x) continue;
            const std::size_t branch = b.morph(built[y], bags[x]);
            acc = acc == SIZE_MAX ? branch : b.join(acc, branch);
        }
        if (acc == SIZE_MAX) acc = b.morph(b.leaf(), bags[x]);
        built[x] = acc;
    }
    b.morph(built[0], {});
    return std::move(b.nodes);
}

// Relation lookup with tuples encoded in base |B|.
struct TargetIndex {
    std::size_t size;
    std::map<std::string, std::unordered_set<std::uint64_t>> rel;

    explicit TargetIndex(const RelationalStructure& b) : size(b.universe_size()) {
        for (const auto& [name, tuples] : b.relations()) {
            auto& set = rel[name];
            for (const auto& t : tuples) set.insert(encode(t));
        }
    }
    std::uint64_t encode(std::span<const Vertex> t) const {
        std::uint64_t code = 0;
        for (Vertex x : t) code = code * size + x;
        return code;
    }
};

}  // namespace

BigCount count_hom_treewidth(const RelationalStructure& a, const TreeDecomposition& t,
                             const RelationalStructure& b, std::uint64_t max_table) {
    if (!(a.signature() == b.signature())) throw InvalidInput("structures have different signatures");
    const auto report = validate_decomposition(gaifman_graph(a), t);
    if (!report.ok)
        throw InvalidInput("decomposition invalid: condition " + std::to_string(report.condition) + " fails at " +
                           report.witness);
    const std::size_t m = b.universe_size();
    if (t.node_count() == 0 || a.universe_size() == 0) return BigCount(1);
    if (m == 0) return BigCount(0);
    std::size_t max_arity = 1;
    for (const auto& [name, ar] : a.signature().symbols()) max_arity = std::max(max_arity, ar);
    {
        BigCount bound = BigCount::pow(BigCount(m), max_arity);
        if (!bound.fits_u64() || bound.to_u64() > (UINT64_MAX >> 1))
            throw BudgetExceeded("target too large for tuple encoding");
    }
    const TargetIndex index(b);

    struct Constraint {
        const std::unordered_set<std::uint64_t>* target;
        const Tuple* tuple;
    };
    std::vector<std::vector<Constraint>> by_vertex(a.universe_size());
    for (const auto& [name, tuples] : a.relations())
        for (const auto& tup : tuples) {
            std::vector<Vertex> distinct(tup.begin(), tup.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (Vertex v : distinct) by_vertex[v].push_back({&index.rel.at(name), &tup});
        }

    const auto nice = make_nice(t);
    std::vector<std::vector<BigCount>> tables(nice.size());
    std::vector<std::size_t> stride_tmp;
    Tuple mapped;
    auto table_size = [&](std::size_t bag_size) {
        const BigCount sz = BigCount::pow(BigCount(m), bag_size);
        if (!sz.fits_u64() || sz.to_u64() > max_table)
            throw BudgetExceeded("DP table with " + sz.str() + " entries exceeds budget of " + std::to_string(max_table));
        return static_cast<std::size_t>(sz.to_u64());
    };
    // entries are indexed in base m, first bag vertex most significant
    std::vector<std::size_t> use_count(nice.size(), 0);
    for (const auto& node : nice) {
        if (node.kind != Kind::leaf) ++use_count[node.left];
        if (node.kind == Kind::join) ++use_count[node.right];
    }
    for (std::size_t id = 0; id < nice.size(); ++id) {
        const NiceNode& node = nice[id];
        const std::size_t w = node.bag.size();
        const std::size_t entries = table_size(w);
        std::vector<BigCount> table;
        switch (node.kind) {
        case Kind::leaf:
            table.assign(1, BigCount(1));
            break;
        case Kind::join: {
            table = tables[node.left];
            const auto& other = tables[node.right];
            for (std::size_t e = 0; e < entries; ++e)
                if (!table[e].is_zero()) table[e] *= other[e];
            break;
        }
        case Kind::forget: {
            const auto& child = tables[node.left];
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(nice[node.left].bag.begin(), nice[node.left].bag.end(), node.vertex) -
                nice[node.left].bag.begin());
            std::size_t low = 1;  // stride of the forgotten position in the child
            for (std::size_t q = pos + 1; q < w + 1; ++q) low *= m;
            table.assign(entries, BigCount(0));
            for (std::size_t e = 0; e < entries; ++e) {
                const std::size_t hi = e / low, lo = e % low;
                for (std::size_t x = 0; x < m; ++x) table[e] += child[(hi * m + x) * low + lo];
            }
            break;
        }
        case Kind::introduce: {
            const auto& child = tables[node.left];
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(node.bag.begin(), node.bag.end(), node.vertex) - node.bag.begin());
            std::size_t low = 1;
            for (std::size_t q = pos + 1; q < w; ++q) low *= m;
            std::vector<const Constraint*> active;
            for (const auto& c : by_vertex[node.vertex]) {
                bool inside = true;
                for (Vertex e : *c.tuple)
                    if (!std::binary_search(node.bag.begin(), node.bag.end(), e)) inside = false;
                if (inside) active.push_back(&c);
            }
            table.assign(entries, BigCount(0));
            std::vector<Vertex> assignment(w);
            for (std::size_t e = 0; e < entries; ++e) {
                const std::size_t hi = e / (low * m), lo = e % low;
                const BigCount& base = child[hi * low + lo];
                if (base.is_zero()) continue;
                std::size_t rest = e;
                for (std::size_t q = w; q-- > 0;) {
                    assignment[q] = static_cast<Vertex>(rest % m);
                    rest /= m;
                }
                bool ok = true;
                for (const Constraint* c : active) {
                    mapped.clear();
                    for (Vertex el : *c->tuple) {
                        const auto at = std::lower_bound(node.bag.begin(), node.bag.end(), el) - node.bag.begin();
                        mapped.push_back(assignment[static_cast<std::size_t>(at)]);
                    }
                    if (!c->target->count(index.encode(mapped))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) table[e] = base;
            }
            break;
        }
        }
        tables[id] = std::move(table);
        if (node.kind != Kind::leaf && --use_count[node.left] == 0) std::vector<BigCount>().swap(tables[node.left]);
        if (node.kind == Kind::join && --use_count[node.right] == 0) std::vector<BigCount>().swap(tables[node.right]);
    }
    return tables.back()[0];
}

BigCount count_hom_treewidth(const Graph& a, const TreeDecomposition& t, const Graph& b, std::uint64_t max_table) {
    return count_hom_treewidth(graph_as_structure(a), t, graph_as_structure(b), max_table);
}

}  // namespace homcsp
