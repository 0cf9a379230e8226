#include "homcsp/structure.hpp"

#include <algorithm>

#include "homcsp/errors.hpp"

namespace homcsp {

Signature::Signature(std::map<std::string, std::size_t> symbols) : symbols_(std::move(symbols)) {
    for (const auto& [name, ar] : symbols_) {
        if (ar == 0)
            throw InvalidInput("symbol '" + name + "' must have arity >= 1");
        if (name.empty())
            throw InvalidInput("empty relation symbol name");
    }
}

std::size_t Signature::arity(const std::string& name) const {
    auto it = symbols_.find(name);
    if (it == symbols_.end())
        throw InvalidInput("unknown relation symbol '" + name + "'");
    return it->second;
}

RelationalStructure::RelationalStructure(Signature signature, std::size_t universe_size,
                                         std::map<std::string, std::set<Tuple>> relations)
    : signature_(std::move(signature)), universe_size_(universe_size), relations_(std::move(relations)) {
    for (const auto& [name, tuples] : relations_) {
        const std::size_t ar = signature_.arity(name);
        for (const Tuple& t : tuples) {
            if (t.size() != ar)
                throw InvalidInput("tuple of wrong arity in relation '" + name + "'");
            for (Vertex x : t)
                if (x >= universe_size_)
                    throw InvalidInput("tuple entry out of universe in relation '" + name + "'");
        }
    }
    for (const auto& [name, ar] : signature_.symbols())
        relations_.try_emplace(name);
}

const std::set<Tuple>& RelationalStructure::relation(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end())
        throw InvalidInput("unknown relation symbol '" + name + "'");
    return it->second;
}

std::size_t structure_size(const RelationalStructure& a) {
    std::size_t total = a.signature().size() + a.universe_size();
    for (const auto& [name, tuples] : a.relations())
        total += tuples.size() * a.signature().arity(name);
    return total;
}

bool is_homomorphism(const RelationalStructure& a, const RelationalStructure& b,
                     std::span<const Vertex> map) {
    if (!(a.signature() == b.signature()))
        throw InvalidInput("structures have different signatures");
    if (map.size() != a.universe_size())
        throw InvalidInput("map is not total on the universe of the source structure");
    for (Vertex x : map)
        if (x >= b.universe_size())
            throw InvalidInput("map leaves the universe of the target structure");
    Tuple image;
    for (const auto& [name, tuples] : a.relations()) {
        const auto& target = b.relation(name);
        for (const Tuple& t : tuples) {
            image.resize(t.size());
            std::transform(t.begin(), t.end(), image.begin(), [&](Vertex x) { return map[x]; });
            if (!target.count(image))
                return false;
        }
    }
    return true;
}

bool is_graph_homomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
    if (map.size() != a.vertex_count())
        throw InvalidInput("map is not total on the pattern graph");
    for (auto [u, v] : a.edges())
        if (!b.has_edge(map[u], map[v]))
            return false;
    return true;
}

Graph gaifman_graph(const RelationalStructure& a) {
    std::vector<Edge> edges;
    for (const auto& [name, tuples] : a.relations())
        for (const Tuple& t : tuples)
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] != t[j])
                        edges.emplace_back(t[i], t[j]);
    return Graph(a.universe_size(), edges);
}

RelationalStructure graph_as_structure(const Graph& g) {
    std::set<Tuple> rel;
    for (auto [u, v] : g.edges()) {
        rel.insert(Tuple{u, v});
        rel.insert(Tuple{v, u});
    }
    return RelationalStructure(Signature({{kEdgeSymbol, 2}}), g.vertex_count(),
                               {{kEdgeSymbol, std::move(rel)}});
}

}  // namespace homcsp
