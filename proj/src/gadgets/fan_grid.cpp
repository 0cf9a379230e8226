#include "homcsp/fan_grid.hpp"

#include <string>

#include "homcsp/errors.hpp"

namespace homcsp {

namespace {

std::string cell_str(const Cell& c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.p) + ")";
}

bool in_range(const Cell& c, std::size_t k, std::size_t r) {
    return c.i >= 1 && c.p >= 1 && c.i <= static_cast<long>(k) && c.p <= static_cast<long>(r);
}

void check_sites(std::size_t k, std::size_t r, const std::vector<Cell>& cells) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
        if (!in_range(cells[a], k, r)) {
            throw InvalidInput("fan position u" + std::to_string(a + 1) + " = " + cell_str(cells[a]) +
                               " lies outside the " + std::to_string(k) + "x" + std::to_string(r) +
                               " grid");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (cells[a] == cells[b]) {
                throw InvalidInput("fan positions u" + std::to_string(b + 1) + " and u" +
                                   std::to_string(a + 1) + " coincide at " + cell_str(cells[a]));
            }
        }
    }
}

}  // namespace

Graph grid_graph(std::size_t k, std::size_t r) {
    std::vector<Edge> edges;
    edges.reserve(2 * k * r);
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t p = 1; p <= r; ++p) {
            const Vertex v = grid_vertex_id(static_cast<long>(i), static_cast<long>(p), r);
            if (p < r) edges.emplace_back(v, v + 1);
            if (i < k) edges.emplace_back(v, static_cast<Vertex>(v + r));
        }
    }
    return Graph(k * r, edges);
}

std::array<Cell, 12> canonical_fan_positions(std::size_t k_, std::size_t r_) {
    const long k = static_cast<long>(k_);
    const long r = static_cast<long>(r_);
    return {Cell{1, 1},     Cell{1, r},     Cell{k, 1},     Cell{k, r},
            Cell{1, 3},     Cell{1, r - 3}, Cell{k, 3},     Cell{k, r - 3},
            Cell{3, 1},     Cell{4, r},     Cell{k - 2, 1}, Cell{k - 3, r}};
}

FanGrid::FanGrid(std::size_t k, std::size_t r, std::vector<FanSite> sites)
    : k_(k), r_(r), sites_(std::move(sites)) {
    if (k == 0 || r == 0) throw InvalidInput("grid dimensions must be positive");
    std::vector<Cell> cells;
    for (const auto& s : sites_) cells.push_back(s.position);
    check_sites(k, r, cells);

    std::vector<Edge> edges = grid_graph(k, r).edges();
    std::size_t next = k * r;
    for (const auto& s : sites_) {
        const Vertex u = grid_vertex_id(s.position.i, s.position.p, r);
        fan_vertices_.push_back(u);
        std::vector<Vertex> leaves;
        for (std::size_t j = 0; j < s.leaves; ++j) {
            leaves.push_back(static_cast<Vertex>(next));
            edges.emplace_back(u, static_cast<Vertex>(next));
            ++next;
        }
        fan_sets_.push_back(std::move(leaves));
    }
    graph_ = Graph(next, edges);
}

Cell FanGrid::coord(Vertex v) const {
    if (!is_grid_vertex(v)) throw InvalidInput("vertex " + std::to_string(v) + " is not a grid vertex");
    return Cell{static_cast<long>(v / r_) + 1, static_cast<long>(v % r_) + 1};
}

std::vector<Vertex> FanGrid::corner_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t j = 0; j < sites_.size(); ++j) {
        const Cell& c = sites_[j].position;
        const bool row_end = c.i == 1 || c.i == static_cast<long>(k_);
        const bool col_end = c.p == 1 || c.p == static_cast<long>(r_);
        if (row_end && col_end) out.push_back(fan_vertices_[j]);
    }
    return out;
}

void validate_fan_grid_spec(const FanGridSpec& spec) {
    if (!spec.relaxed) {
        if (spec.k < 8 || spec.r < 8) {
            throw InvalidInput("canonical fan-grid needs k, r >= 8 (got k=" + std::to_string(spec.k) +
                               ", r=" + std::to_string(spec.r) + ")");
        }
        return;
    }
    if (spec.k == 0 || spec.r == 0) throw InvalidInput("grid dimensions must be positive");
    const auto pos = canonical_fan_positions(spec.k, spec.r);
    check_sites(spec.k, spec.r, std::vector<Cell>(pos.begin(), pos.end()));
}

FanGrid build_fan_grid(const FanGridSpec& spec) {
    validate_fan_grid_spec(spec);
    const auto pos = canonical_fan_positions(spec.k, spec.r);
    std::vector<FanSite> sites;
    for (std::size_t j = 0; j < 12; ++j) sites.push_back({pos[j], j < 4 ? spec.l1 : spec.l2});
    return FanGrid(spec.k, spec.r, std::move(sites));
}

}  // namespace homcsp
