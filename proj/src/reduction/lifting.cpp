#include <algorithm>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp {

namespace {

bool has_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const auto a = g.neighbors(u), b = g.neighbors(v);
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) return true;
    }
    return false;
}

}  // namespace

std::pair<RelationalStructure, RelationalStructure> lift_to_structures(const RelationalStructure& a_template,
                                                                      const Graph& h) {
    if (has_triangle(gaifman_graph(a_template)))
        throw InvalidInput("template's Gaifman graph contains a triangle; tuples may have three distinct elements");
    std::map<std::string, std::set<Tuple>> relations;
    for (const auto& [name, tuples] : a_template.relations()) {
        auto& out = relations[name];
        std::set<std::vector<bool>> patterns;  // positions equal to the first element
        for (const auto& t : tuples) {
            std::vector<bool> first(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) first[i] = t[i] == t[0];
            patterns.insert(std::move(first));
        }
        for (const auto& pattern : patterns) {
            for (const auto& [u, v] : h.edges()) {
                Tuple y(pattern.size()), z(pattern.size());
                for (std::size_t i = 0; i < pattern.size(); ++i) {
                    y[i] = pattern[i] ? u : v;
                    z[i] = pattern[i] ? v : u;
                }
                out.insert(std::move(y));
                out.insert(std::move(z));
            }
        }
    }
    RelationalStructure b(a_template.signature(), h.vertex_count(), std::move(relations));
    return {a_template, std::move(b)};
}

std::pair<RelationalStructure, RelationalStructure> lift_to_structures(const RelationalStructure& a_template,
                                                                      const HGraph& h) {
    return lift_to_structures(a_template, h.materialize());
}

}  // namespace homcsp
