#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcsp/bigcount.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/graph.hpp"
#include "homcsp/pair_index.hpp"

namespace homcsp {

/// Label (v, e, i, p) of a grid-part vertex. `e` indexes source.edges().
struct H1Label {
    Vertex v = 0;
    std::uint32_t e = 0;
    std::uint32_t i = 0;
    std::uint32_t p = 0;
};

enum class PaddingPolicy {
    nested_prefix,  // S_j = first c members of K_j
    rotating,       // S_j = c consecutive members starting at a per-vertex offset
};

/// The target graph H(G, k, W1, W2).
///
/// The grid part H1 is always built explicitly. The leaf classes K1..K12 are
/// kept implicit (sizes plus one padding count per fan-labelled vertex) so
/// that degrees are available for any W; `materialize()` produces the full
/// graph when the classes are small enough.
///
/// Materialized ids: H1 vertices 0..h1_size()-1, then K1, K2, ..., K12.
class HGraph {
public:
    const Graph& source() const { return source_; }
    std::size_t k() const { return index_.k(); }
    std::size_t r() const { return index_.r(); }
    const PairIndex& pair_index() const { return index_; }
    const BigCount& w1() const { return w1_; }
    const BigCount& w2() const { return w2_; }
    PaddingPolicy padding_policy() const { return policy_; }

    /// H1 as an induced subgraph (ids 0..h1_size()-1).
    const Graph& h1() const { return h1_; }
    std::size_t h1_size() const { return labels_.size(); }
    const H1Label& label(Vertex x) const { return labels_[x]; }
    /// Id of (v, e, i, p) in H1, if that label exists.
    std::optional<Vertex> find(Vertex v, std::uint32_t e, std::uint32_t i, std::uint32_t p) const;
    /// H1 vertices with row label i and column label p.
    std::span<const Vertex> slot(std::uint32_t i, std::uint32_t p) const;

    /// Fan index j (0..11) whose leaf class pads x, or -1 for non-fan vertices.
    /// Where canonical positions coincide, the lowest index wins, so corners
    /// keep their W1 padding.
    int fan_role(Vertex x) const { return roles_[x]; }
    bool is_fan_labelled(Vertex x) const { return roles_[x] >= 0; }
    bool is_corner_labelled(Vertex x) const { return roles_[x] >= 0 && roles_[x] < 4; }
    /// Corner class 0..3 of a label position, or -1.
    int corner_class(Vertex x) const;
    /// Whether (i, p) is one of the (up to twelve) fan positions.
    bool is_fan_position(long i, long p) const;

    /// |K_j|: W1 for j < 4, W2 otherwise.
    const BigCount& class_size(std::size_t j) const { return j < 4 ? w1_ : w2_; }
    /// |S_j| attached to x (zero for non-fan vertices).
    const BigCount& padding(Vertex x) const { return padding_[x]; }
    /// Degree in the full H of an H1 vertex.
    BigCount degree(Vertex x) const;

    /// Full H as a plain graph; BudgetExceeded when it has more than
    /// `max_vertices` vertices or `max_edges` edges.
    Graph materialize(std::size_t max_vertices = 2'000'000, std::size_t max_edges = 20'000'000) const;
    /// Id of the first K_j member in the materialized graph.
    std::size_t class_offset(std::size_t j) const;
    std::size_t materialized_vertex_count() const;

    nlohmann::json metadata() const;

private:
    friend HGraph build_h_graph(const Graph&, std::size_t, const BigCount&, const BigCount&,
                                PaddingPolicy);
    HGraph(Graph source, std::size_t k) : source_(std::move(source)), index_(k) {}

    Graph source_;
    PairIndex index_;
    BigCount w1_, w2_;
    PaddingPolicy policy_ = PaddingPolicy::nested_prefix;
    std::vector<H1Label> labels_;
    std::vector<std::size_t> slot_offsets_;  // slot s = (i-1)*r + (p-1)
    std::vector<Vertex> slot_members_;
    Graph h1_;
    std::vector<int> roles_;
    std::vector<BigCount> padding_;
    std::array<Cell, 12> fan_positions_{};
};

/// Builds H(G, k, W1, W2). Requires G to have an edge and k >= 2. Throws
/// InvalidInput naming the vertex if some fan-labelled vertex already has more
/// than its target degree; with W1, W2 > 2(n+m) this cannot happen.
HGraph build_h_graph(const Graph& g, std::size_t k, const BigCount& w1, const BigCount& w2,
                     PaddingPolicy policy = PaddingPolicy::nested_prefix);

/// |H1| = 2r * 2m + (kr - 2r)(nm - 2m), from the per-slot candidate count.
BigCount h1_census(const BigCount& n, const BigCount& m, std::size_t k);

/// Result of checking the degree targets of a built H.
struct DegreeAudit {
    bool ok = true;
    std::size_t corner_vertices = 0;
    std::size_t other_fan_vertices = 0;
    std::size_t max_nonfan_degree = 0;
    std::size_t max_boundary_nonfan_degree = 0;  // non-fan vertices in columns 1 and r
    std::vector<std::string> failures;
};

/// Corner-labelled vertices must have degree exactly W1, other fan-labelled
/// vertices exactly W2, non-fan vertices at most 2n+2m, and non-fan vertices
/// in the boundary columns at most 2n+m.
DegreeAudit audit_degrees(const HGraph& h);

}  // namespace homcsp
