#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcsp/fan_grid.hpp"
#include "homcsp/graph.hpp"

namespace homcsp {

/// Branch set per pattern vertex, as host vertex ids.
struct MinorModel {
    std::size_t host_rows = 0;
    std::size_t host_cols = 0;
    Graph host;
    Graph pattern;
    std::vector<std::vector<Vertex>> branch_sets;
};

struct MinorReport {
    bool ok = true;
    std::string violation;  // "empty", "overlap", "disconnected", "missing_edge" or ""
    std::string witness;
};

/// Model of L(k, r, l1, l2) in the (k+2l) x (r+2l) grid, l = max(l1, l2).
/// Grid vertices sit on the inner k x r subgrid. Each fan vertex grows a
/// straight path of |M_j| border cells pointing away from the inner grid,
/// and the j-th leaf is the border cell beside the j-th path cell. Corners
/// put their leaves in the free corner squares.
MinorModel fan_grid_minor_model(std::size_t k, std::size_t r, std::size_t l1, std::size_t l2);

/// Branch sets nonempty, pairwise disjoint, each connected in `host`, and
/// every pattern edge realized by a host edge between its branch sets.
MinorReport validate_minor_model(const Graph& host, const Graph& pattern,
                                 const std::vector<std::vector<Vertex>>& branch_sets);

}  // namespace homcsp
