#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "homcsp/fan_grid.hpp"
#include "homcsp/graph.hpp"

namespace homcsp {

/// Tree of bags. Node ids are 0..bags.size()-1; bags are kept sorted.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

    std::size_t node_count() const { return bags.size(); }
};

struct DecompositionReport {
    bool ok = true;
    int condition = 0;     // first violated condition (1 cover, 2 connectivity, 3 edge), 0 if ok
    std::string witness;   // vertex "v" or edge "{u,v}"
};

/// Checks the three conditions against `g`. Throws InvalidInput when the tree
/// edges do not form a tree or a bag mentions a vertex outside `g`.
DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& t);

/// Largest bag size minus one (0 for a single empty bag). Throws InvalidInput
/// on a decomposition without nodes.
std::size_t width(const TreeDecomposition& t);

enum class EliminationStrategy { min_degree, min_fill };

/// Decomposition induced by eliminating vertices in `order`.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Greedy elimination ordering heuristic; ties broken by smallest vertex id.
TreeDecomposition decompose_heuristic(const Graph& g, EliminationStrategy strategy);

/// Minimum-width decomposition by dynamic programming over vertex subsets.
/// Throws InvalidInput when g has more than max_n vertices.
TreeDecomposition decompose_exact(const Graph& g, std::size_t max_n = 16);

/// Column sweep of the k x r grid (row-major ids); width min(k, r), except
/// that the 1 x 1 grid is a single bag of width 0.
TreeDecomposition grid_path_decomposition(std::size_t k, std::size_t r);

/// Sweep of the grid part plus one pendant bag {w, u_j} per fan leaf.
TreeDecomposition fan_grid_decomposition(const FanGrid& fg);
TreeDecomposition fan_grid_decomposition(const FanGridSpec& spec);

nlohmann::json decomposition_to_json(const TreeDecomposition& t);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace homcsp
