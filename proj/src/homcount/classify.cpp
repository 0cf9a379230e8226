#include <map>
#include <string>

#include "homcsp/classify.hpp"
#include "homcsp/errors.hpp"

namespace homcsp {

std::string to_string(HomClass c) {
    switch (c) {
    case HomClass::identity: return "identity";
    case HomClass::skew_identity: return "skew_identity";
    case HomClass::cc_other: return "cc_other";
    case HomClass::non_cc: return "non_cc";
    case HomClass::touches_H2: return "touches_H2";
    }
    return "unknown";
}

HomClass classify_hom(std::span<const Vertex> grid_map, const FanGrid& l, const HGraph& h) {
    const std::size_t k = h.k(), r = h.r();
    if (l.rows() != k || l.cols() != r)
        throw InvalidInput("fan-grid is " + std::to_string(l.rows()) + "x" + std::to_string(l.cols()) +
                           " but H expects " + std::to_string(k) + "x" + std::to_string(r));
    if (grid_map.size() != k * r) throw InvalidInput("map must cover every grid vertex");
    bool identity = true, skew = true, h2 = false;
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t p = 1; p <= r; ++p) {
            const Vertex x = grid_map[l.grid_vertex(static_cast<long>(i), static_cast<long>(p))];
            if (x >= h.h1_size()) {
                h2 = true;
                identity = skew = false;
                continue;
            }
            const auto& lab = h.label(x);
            if (lab.p != p || lab.i != i) identity = false;
            if (lab.p != p || lab.i != k - i + 1) skew = false;
        }
    }
    if (identity) return HomClass::identity;
    if (skew) return HomClass::skew_identity;
    if (h2) return HomClass::touches_H2;
    const long kk = static_cast<long>(k), rr = static_cast<long>(r);
    for (const Cell c : {Cell{1, 1}, Cell{1, rr}, Cell{kk, 1}, Cell{kk, rr}})
        if (h.corner_class(grid_map[l.grid_vertex(c.i, c.p)]) < 0) return HomClass::non_cc;
    return HomClass::cc_other;
}

bool verify_parity_preservation(std::span<const Vertex> phi, const Graph& g, const Graph& h,
                                std::span<const std::pair<Vertex, Vertex>> sample_pairs) {
    if (g.vertex_count() > 0 && bipartition(g).empty()) throw InvalidInput("pattern graph is not bipartite");
    if (h.vertex_count() > 0 && bipartition(h).empty()) throw InvalidInput("target graph is not bipartite");
    if (phi.size() != g.vertex_count()) throw InvalidInput("map must cover every pattern vertex");
    std::map<Vertex, std::vector<std::size_t>> from_g, from_h;
    for (const auto& [u, v] : sample_pairs) {
        if (u >= g.vertex_count() || v >= g.vertex_count()) throw InvalidInput("sample pair outside the pattern");
        auto& dg = from_g.try_emplace(u, bfs_distances(g, u)).first->second;
        if (dg[v] == SIZE_MAX) continue;
        auto& dh = from_h.try_emplace(phi[u], bfs_distances(h, phi[u])).first->second;
        const std::size_t d = dh[phi[v]];
        if (d == SIZE_MAX || d > dg[v] || (d % 2) != (dg[v] % 2)) return false;
    }
    return true;
}

Domains identity_domains(const HGraph& h, bool skew) {
    const std::size_t k = h.k(), r = h.r();
    Domains d(k * r);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t p = 1; p <= r; ++p) {
            const auto layer = static_cast<std::uint32_t>(skew ? k - i + 1 : i);
            const auto s = h.slot(layer, static_cast<std::uint32_t>(p));
            d[grid_vertex_id(static_cast<long>(i), static_cast<long>(p), r)].assign(s.begin(), s.end());
        }
    return d;
}

}  // namespace homcsp
