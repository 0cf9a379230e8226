#include "homcsp/hgraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "homcsp/errors.hpp"

namespace homcsp {

namespace {

bool endpoint_of(const Edge& e, Vertex v) { return e.first == v || e.second == v; }

}  // namespace

HGraph build_h_graph(const Graph& g, std::size_t k, const BigCount& w1, const BigCount& w2,
                     PaddingPolicy policy) {
    if (g.edge_count() == 0) throw InvalidInput("H(G, k, W1, W2) needs G to have at least one edge");
    if (k < 2) throw InvalidInput("H(G, k, W1, W2) needs k >= 2");

    HGraph h(g, k);
    h.w1_ = w1;
    h.w2_ = w2;
    h.policy_ = policy;
    const std::size_t r = h.index_.r();
    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();

    h.slot_offsets_.assign(k * r + 1, 0);
    for (std::uint32_t i = 1; i <= k; ++i) {
        for (std::uint32_t p = 1; p <= r; ++p) {
            const bool in_pair = h.index_.contains(p, i);
            for (Vertex v = 0; v < n; ++v) {
                for (std::uint32_t e = 0; e < edges.size(); ++e) {
                    if (endpoint_of(edges[e], v) == in_pair) h.labels_.push_back({v, e, i, p});
                }
            }
            h.slot_offsets_[(i - 1) * r + p] = h.labels_.size();
        }
    }
    h.slot_members_.resize(h.labels_.size());
    for (std::size_t x = 0; x < h.labels_.size(); ++x) h.slot_members_[x] = static_cast<Vertex>(x);

    std::vector<Edge> h1_edges;
    for (std::uint32_t i = 1; i <= k; ++i) {
        for (std::uint32_t p = 1; p <= r; ++p) {
            const auto here = h.slot(i, p);
            if (i < k) {
                // same e, any v
                std::map<std::uint32_t, std::vector<Vertex>> below_by_e;
                for (Vertex y : h.slot(i + 1, p)) below_by_e[h.labels_[y].e].push_back(y);
                for (Vertex x : here) {
                    auto it = below_by_e.find(h.labels_[x].e);
                    if (it == below_by_e.end()) continue;
                    for (Vertex y : it->second) h1_edges.emplace_back(x, y);
                }
            }
            if (p < r) {
                // same v, any e
                std::map<Vertex, std::vector<Vertex>> right_by_v;
                for (Vertex y : h.slot(i, p + 1)) right_by_v[h.labels_[y].v].push_back(y);
                for (Vertex x : here) {
                    auto it = right_by_v.find(h.labels_[x].v);
                    if (it == right_by_v.end()) continue;
                    for (Vertex y : it->second) h1_edges.emplace_back(x, y);
                }
            }
        }
    }
    h.h1_ = Graph(h.labels_.size(), h1_edges);

    h.fan_positions_ = canonical_fan_positions(k, r);
    h.roles_.assign(h.labels_.size(), -1);
    h.padding_.assign(h.labels_.size(), BigCount(0));
    for (std::size_t x = 0; x < h.labels_.size(); ++x) {
        const auto& lab = h.labels_[x];
        for (std::size_t j = 0; j < 12; ++j) {
            if (h.fan_positions_[j] == Cell{static_cast<long>(lab.i), static_cast<long>(lab.p)}) {
                h.roles_[x] = static_cast<int>(j);
                break;
            }
        }
        if (h.roles_[x] < 0) continue;
        const BigCount& target = h.class_size(static_cast<std::size_t>(h.roles_[x]));
        const BigCount natural(h.h1_.degree(static_cast<Vertex>(x)));
        if (natural > target) {
            throw InvalidInput("padding infeasible: vertex (v=" + std::to_string(lab.v) + ", e=" +
                               std::to_string(lab.e) + ", i=" + std::to_string(lab.i) + ", p=" +
                               std::to_string(lab.p) + ") already has degree " + natural.str() +
                               " > target " + target.str());
        }
        h.padding_[x] = target - natural;
    }
    return h;
}

std::optional<Vertex> HGraph::find(Vertex v, std::uint32_t e, std::uint32_t i, std::uint32_t p) const {
    if (i < 1 || i > k() || p < 1 || p > r()) return std::nullopt;
    const auto s = slot(i, p);
    auto it = std::lower_bound(s.begin(), s.end(), std::pair{v, e}, [&](Vertex x, const std::pair<Vertex, std::uint32_t>& key) {
        return std::pair{labels_[x].v, labels_[x].e} < key;
    });
    if (it == s.end() || labels_[*it].v != v || labels_[*it].e != e) return std::nullopt;
    return *it;
}

std::span<const Vertex> HGraph::slot(std::uint32_t i, std::uint32_t p) const {
    if (i < 1 || i > k() || p < 1 || p > r()) throw InvalidInput("slot out of range");
    const std::size_t s = (i - 1) * r() + (p - 1);
    return std::span<const Vertex>(slot_members_).subspan(slot_offsets_[s], slot_offsets_[s + 1] - slot_offsets_[s]);
}

int HGraph::corner_class(Vertex x) const {
    const auto& lab = labels_[x];
    const bool top = lab.i == 1, bottom = lab.i == k();
    const bool left = lab.p == 1, right = lab.p == r();
    if (top && left) return 0;
    if (top && right) return 1;
    if (bottom && left) return 2;
    if (bottom && right) return 3;
    return -1;
}

bool HGraph::is_fan_position(long i, long p) const {
    return std::find(fan_positions_.begin(), fan_positions_.end(), Cell{i, p}) != fan_positions_.end();
}

BigCount HGraph::degree(Vertex x) const { return BigCount(h1_.degree(x)) + padding_[x]; }

std::size_t HGraph::class_offset(std::size_t j) const {
    std::size_t off = labels_.size();
    for (std::size_t t = 0; t < j; ++t) off += class_size(t).to_u64();
    return off;
}

std::size_t HGraph::materialized_vertex_count() const { return class_offset(12); }

Graph HGraph::materialize(std::size_t max_vertices, std::size_t max_edges) const {
    if (!w1_.fits_u64() || !w2_.fits_u64() || w1_ > BigCount(max_vertices) || w2_ > BigCount(max_vertices))
        throw BudgetExceeded("H has leaf classes larger than the vertex budget");
    const std::size_t nv = materialized_vertex_count();
    if (nv > max_vertices) throw BudgetExceeded("H has " + std::to_string(nv) + " vertices, budget " + std::to_string(max_vertices));
    std::size_t ne = h1_.edge_count();
    for (const auto& pad : padding_) ne += pad.to_u64();
    if (ne > max_edges) throw BudgetExceeded("H has " + std::to_string(ne) + " edges, budget " + std::to_string(max_edges));

    std::vector<Edge> edges = h1_.edges();
    edges.reserve(ne);
    for (std::size_t x = 0; x < labels_.size(); ++x) {
        if (roles_[x] < 0) continue;
        const auto j = static_cast<std::size_t>(roles_[x]);
        const std::size_t size = class_size(j).to_u64();
        const std::size_t count = padding_[x].to_u64();
        const std::size_t base = class_offset(j);
        const std::size_t start = policy_ == PaddingPolicy::rotating && size > 0 ? x % size : 0;
        for (std::size_t c = 0; c < count; ++c)
            edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(base + (start + c) % size));
    }
    return Graph(nv, edges);
}

nlohmann::json HGraph::metadata() const {
    nlohmann::json j;
    j["kind"] = "hgraph";
    j["k"] = k();
    j["r"] = r();
    j["W1"] = w1_.str();
    j["W2"] = w2_.str();
    j["padding_policy"] = policy_ == PaddingPolicy::nested_prefix ? "nested_prefix" : "rotating";
    j["h1_size"] = labels_.size();
    j["h1_edges"] = h1_.edge_count();
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t x = 0; x < labels_.size(); ++x) {
        const auto& lab = labels_[x];
        const auto& e = source_.edges()[lab.e];
        nlohmann::json entry = {{"id", x}, {"v", lab.v}, {"e", {e.first, e.second}}, {"i", lab.i}, {"p", lab.p}};
        if (roles_[x] >= 0) {
            entry["fan"] = roles_[x] + 1;
            entry["padding"] = padding_[x].str();
        }
        labels.push_back(std::move(entry));
    }
    j["labels"] = std::move(labels);
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t c = 0; c < 12; ++c) {
        nlohmann::json entry = {{"class", c + 1}, {"size", class_size(c).str()}};
        if (class_size(c).fits_u64()) entry["offset"] = class_offset(c);
        classes.push_back(std::move(entry));
    }
    j["k_classes"] = std::move(classes);
    return j;
}

BigCount h1_census(const BigCount& n, const BigCount& m, std::size_t k) {
    const BigCount r(k * (k - 1) / 2);
    const BigCount two_m = BigCount(2) * m;
    return BigCount(2) * r * two_m + (BigCount(k) * r - BigCount(2) * r) * (n * m - two_m);
}

DegreeAudit audit_degrees(const HGraph& h) {
    DegreeAudit audit;
    const std::size_t n = h.source().vertex_count();
    const std::size_t m = h.source().edge_count();
    for (Vertex x = 0; x < h.h1_size(); ++x) {
        const auto& lab = h.label(x);
        auto fail = [&](const std::string& what) {
            audit.ok = false;
            audit.failures.push_back("(v=" + std::to_string(lab.v) + ", e=" + std::to_string(lab.e) + ", i=" +
                                     std::to_string(lab.i) + ", p=" + std::to_string(lab.p) + "): " + what);
        };
        if (h.is_fan_labelled(x)) {
            const bool corner = h.is_corner_labelled(x);
            (corner ? audit.corner_vertices : audit.other_fan_vertices)++;
            const BigCount& target = corner ? h.w1() : h.w2();
            const BigCount d = h.degree(x);
            if (d != target) fail("degree " + d.str() + " != " + target.str());
            continue;
        }
        const std::size_t d = h.h1().degree(x);
        audit.max_nonfan_degree = std::max(audit.max_nonfan_degree, d);
        if (d > 2 * n + 2 * m) fail("non-fan degree " + std::to_string(d) + " > 2n+2m");
        if (lab.p == 1 || lab.p == h.r()) {
            audit.max_boundary_nonfan_degree = std::max(audit.max_boundary_nonfan_degree, d);
            if (d > 2 * n + m) fail("boundary non-fan degree " + std::to_string(d) + " > 2n+m");
        }
    }
    return audit;
}

}  // namespace homcsp
