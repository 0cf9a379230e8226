#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "homcsp/graph.hpp"

namespace homcsp {

/// 1-based grid coordinate (row i in [k], column p in [r]).
struct Cell {
    long i = 0;
    long p = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Row-major vertex id of cell (i, p) in a k x r grid.
inline Vertex grid_vertex_id(long i, long p, std::size_t r) {
    return static_cast<Vertex>((i - 1) * static_cast<long>(r) + (p - 1));
}

/// The (k x r)-grid with row-major vertex ids.
Graph grid_graph(std::size_t k, std::size_t r);

/// The twelve fan positions u1..u12 for a k x r grid, in order. Corners are
/// u1..u4. Positions may fall outside the grid or collide for small k, r.
///
/// u10 = (4, r) and u12 = (k-3, r) are not the mirror images of
/// u9 = (3, 1) and u11 = (k-2, 1). This asymmetry is kept as given: the
/// corner-to-corner case analysis relies on exactly these positions.
std::array<Cell, 12> canonical_fan_positions(std::size_t k, std::size_t r);

struct FanGridSpec {
    std::size_t k = 8;
    std::size_t r = 8;
    std::size_t l1 = 0;  // leaves on each corner fan vertex
    std::size_t l2 = 0;  // leaves on each of the other eight fan vertices
    bool relaxed = false;
};

/// One fan vertex and the number of degree-one leaves attached to it.
struct FanSite {
    Cell position;
    std::size_t leaves = 0;
};

/// A k x r grid with pendant leaves on designated fan vertices.
///
/// Vertex ids: grid cells first (row-major, see grid_vertex_id), then the
/// leaf sets in site order.
class FanGrid {
public:
    /// Sites must be pairwise distinct cells inside the grid; otherwise
    /// InvalidInput names the offending pair.
    FanGrid(std::size_t k, std::size_t r, std::vector<FanSite> sites);

    const Graph& graph() const { return graph_; }
    std::size_t rows() const { return k_; }
    std::size_t cols() const { return r_; }
    std::size_t grid_vertex_count() const { return k_ * r_; }
    bool is_grid_vertex(Vertex v) const { return v < k_ * r_; }
    Vertex grid_vertex(long i, long p) const { return grid_vertex_id(i, p, r_); }
    Cell coord(Vertex v) const;

    std::size_t site_count() const { return sites_.size(); }
    const std::vector<FanSite>& sites() const { return sites_; }
    /// Grid vertex u_j of site j.
    Vertex fan_vertex(std::size_t j) const { return fan_vertices_[j]; }
    const std::vector<Vertex>& fan_vertices() const { return fan_vertices_; }
    /// Leaf set M_j of site j.
    const std::vector<Vertex>& fan_set(std::size_t j) const { return fan_sets_[j]; }
    /// Corner fan vertices; for canonical fan-grids these are u1..u4.
    std::vector<Vertex> corner_vertices() const;

private:
    std::size_t k_, r_;
    std::vector<FanSite> sites_;
    std::vector<Vertex> fan_vertices_;
    std::vector<std::vector<Vertex>> fan_sets_;
    Graph graph_;
};

/// Throws InvalidInput when the spec is not buildable: canonical mode needs
/// k, r >= 8; relaxed mode needs the twelve positions distinct and in range.
void validate_fan_grid_spec(const FanGridSpec& spec);

/// L(k, r, l1, l2) with the canonical fan layout.
FanGrid build_fan_grid(const FanGridSpec& spec);

}  // namespace homcsp
