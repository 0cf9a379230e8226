#include <string>

#include "homcsp/classify.hpp"
#include "homcsp/errors.hpp"

namespace homcsp {

namespace {

void require_grid_hom(std::span<const Vertex> grid_map, const FanGrid& l, const Graph& h) {
    if (grid_map.size() != l.grid_vertex_count())
        throw InvalidInput("map must give an image for each of the " + std::to_string(l.grid_vertex_count()) +
                           " grid vertices");
    for (Vertex x : grid_map)
        if (x >= h.vertex_count()) throw InvalidInput("image " + std::to_string(x) + " outside the target");
    for (const auto& [u, v] : l.graph().edges()) {
        if (!l.is_grid_vertex(u) || !l.is_grid_vertex(v)) continue;
        if (!h.has_edge(grid_map[u], grid_map[v]))
            throw InvalidInput("grid edge " + std::to_string(u) + "-" + std::to_string(v) + " is not preserved");
    }
}

}  // namespace

BigCount extension_weight(std::span<const Vertex> grid_map, const FanGrid& l, const Graph& h) {
    require_grid_hom(grid_map, l, h);
    BigCount w(1);
    for (std::size_t j = 0; j < l.site_count(); ++j)
        w *= BigCount::pow(BigCount(h.degree(grid_map[l.fan_vertex(j)])), l.fan_set(j).size());
    return w;
}

BigCount extension_weight(std::span<const Vertex> grid_map, const FanGrid& l, const HGraph& h) {
    require_grid_hom(grid_map, l, h.h1());
    BigCount w(1);
    for (std::size_t j = 0; j < l.site_count(); ++j)
        w *= BigCount::pow(h.degree(grid_map[l.fan_vertex(j)]), l.fan_set(j).size());
    return w;
}

}  // namespace homcsp
