#include "homcsp/minor.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

namespace homcsp {

namespace {

struct Route {
    long di, dj;  // direction of the path, away from the inner grid
    long li, lj;  // offset of each leaf from its path cell
};

// Directions for u1..u12, see the header comment.
constexpr Route kRoutes[12] = {
    {-1, 0, 0, -1}, {-1, 0, 0, 1}, {1, 0, 0, -1}, {1, 0, 0, 1},  // corners
    {-1, 0, 0, -1}, {-1, 0, 0, 1}, {1, 0, 0, -1}, {1, 0, 0, 1},  // u5..u8
    {0, -1, -1, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 1, 1, 0},  // u9..u12
};

}  // namespace

MinorModel fan_grid_minor_model(std::size_t k, std::size_t r, std::size_t l1, std::size_t l2) {
    FanGridSpec spec{k, r, l1, l2, k < 8 || r < 8};
    const FanGrid fg = build_fan_grid(spec);
    const std::size_t l = std::max(l1, l2);

    MinorModel model;
    model.host_rows = k + 2 * l;
    model.host_cols = r + 2 * l;
    model.host = grid_graph(model.host_rows, model.host_cols);
    model.pattern = fg.graph();
    model.branch_sets.assign(fg.graph().vertex_count(), {});

    auto host_id = [&](long i, long p) { return grid_vertex_id(i, p, model.host_cols); };
    const long off = static_cast<long>(l);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t p = 1; p <= r; ++p)
            model.branch_sets[fg.grid_vertex(static_cast<long>(i), static_cast<long>(p))] = {
                host_id(off + static_cast<long>(i), off + static_cast<long>(p))};

    for (std::size_t j = 0; j < fg.site_count(); ++j) {
        const Cell c = fg.sites()[j].position;
        const Route& rt = kRoutes[j];
        auto& branch = model.branch_sets[fg.fan_vertex(j)];
        const auto& leaves = fg.fan_set(j);
        for (std::size_t t = 1; t <= leaves.size(); ++t) {
            const long pi = off + c.i + rt.di * static_cast<long>(t);
            const long pj = off + c.p + rt.dj * static_cast<long>(t);
            branch.push_back(host_id(pi, pj));
            model.branch_sets[leaves[t - 1]] = {host_id(pi + rt.li, pj + rt.lj)};
        }
    }
    return model;
}

MinorReport validate_minor_model(const Graph& host, const Graph& pattern,
                                 const std::vector<std::vector<Vertex>>& branch_sets) {
    MinorReport report;
    auto fail = [&](std::string violation, std::string witness) {
        report.ok = false;
        report.violation = std::move(violation);
        report.witness = std::move(witness);
        return report;
    };
    if (branch_sets.size() != pattern.vertex_count())
        return fail("empty", "expected " + std::to_string(pattern.vertex_count()) + " branch sets");

    constexpr std::size_t kFree = SIZE_MAX;
    std::vector<std::size_t> owner(host.vertex_count(), kFree);
    for (std::size_t a = 0; a < branch_sets.size(); ++a) {
        if (branch_sets[a].empty()) return fail("empty", "pattern vertex " + std::to_string(a));
        for (Vertex x : branch_sets[a]) {
            if (x >= host.vertex_count())
                return fail("empty", "host vertex " + std::to_string(x) + " out of range");
            if (owner[x] != kFree)
                return fail("overlap", "host vertex " + std::to_string(x) + " in branch sets of " +
                                           std::to_string(owner[x]) + " and " + std::to_string(a));
            owner[x] = a;
        }
    }
    for (std::size_t a = 0; a < branch_sets.size(); ++a) {
        const auto& set = branch_sets[a];
        std::vector<Vertex> seen{set.front()};
        std::deque<Vertex> queue{set.front()};
        std::vector<bool> mark(host.vertex_count(), false);
        mark[set.front()] = true;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : host.neighbors(x)) {
                if (owner[y] == a && !mark[y]) {
                    mark[y] = true;
                    queue.push_back(y);
                    seen.push_back(y);
                }
            }
        }
        if (seen.size() != set.size())
            return fail("disconnected", "branch set of pattern vertex " + std::to_string(a));
    }
    for (const auto& [a, b] : pattern.edges()) {
        bool found = false;
        for (Vertex x : branch_sets[a]) {
            for (Vertex y : host.neighbors(x))
                if (owner[y] == b) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) return fail("missing_edge", std::to_string(a) + "-" + std::to_string(b));
    }
    return report;
}

}  // namespace homcsp
