#include <algorithm>

#include "homcsp/errors.hpp"
#include "homcsp/treewidth.hpp"

namespace homcsp {

TreeDecomposition grid_path_decomposition(std::size_t k, std::size_t r) {
    if (k == 0 || r == 0) throw InvalidInput("grid dimensions must be positive");
    // Sweep along the longer side: cells are listed so that the shorter side
    // varies fastest, and every grid edge joins cells at most `h` apart.
    const bool by_columns = k <= r;
    const std::size_t h = by_columns ? k : r;
    std::vector<Vertex> cells;
    cells.reserve(k * r);
    if (by_columns) {
        for (std::size_t p = 1; p <= r; ++p)
            for (std::size_t i = 1; i <= k; ++i) cells.push_back(grid_vertex_id(static_cast<long>(i), static_cast<long>(p), r));
    } else {
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t p = 1; p <= r; ++p) cells.push_back(grid_vertex_id(static_cast<long>(i), static_cast<long>(p), r));
    }
    TreeDecomposition td;
    const std::size_t window = std::min(h + 1, cells.size());
    for (std::size_t start = 0; start + window <= cells.size(); ++start) {
        std::vector<Vertex> bag(cells.begin() + static_cast<long>(start), cells.begin() + static_cast<long>(start + window));
        std::sort(bag.begin(), bag.end());
        if (!td.bags.empty()) td.tree_edges.emplace_back(td.bags.size() - 1, td.bags.size());
        td.bags.push_back(std::move(bag));
    }
    return td;
}

TreeDecomposition fan_grid_decomposition(const FanGrid& fg) {
    TreeDecomposition td = grid_path_decomposition(fg.rows(), fg.cols());
    const std::size_t sweep = td.node_count();
    for (std::size_t j = 0; j < fg.site_count(); ++j) {
        const Vertex u = fg.fan_vertex(j);
        std::size_t host = 0;
        while (host < sweep && !std::binary_search(td.bags[host].begin(), td.bags[host].end(), u)) ++host;
        for (Vertex w : fg.fan_set(j)) {
            td.tree_edges.emplace_back(host, td.bags.size());
            td.bags.push_back({std::min(u, w), std::max(u, w)});
        }
    }
    return td;
}

TreeDecomposition fan_grid_decomposition(const FanGridSpec& spec) {
    return fan_grid_decomposition(build_fan_grid(spec));
}

}  // namespace homcsp
