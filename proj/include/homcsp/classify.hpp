#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homcsp/bigcount.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/graph.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/homcount.hpp"

namespace homcsp {

enum class HomClass { identity, skew_identity, cc_other, non_cc, touches_H2 };

std::string to_string(HomClass c);

/// Product over fan sites j of deg_H(phi(u_j))^{|M_j|}. `grid_map[v]` is
/// the image of grid vertex v (row-major). Throws InvalidInput when the map
/// is not a homomorphism of the bare grid into `h`.
BigCount extension_weight(std::span<const Vertex> grid_map, const FanGrid& l, const Graph& h);

/// Same weight with degrees taken from H(G, k, W1, W2); images are H1 ids.
BigCount extension_weight(std::span<const Vertex> grid_map, const FanGrid& l, const HGraph& h);

/// Class of a grid-restricted map. Images are ids of the materialized H, so
/// ids >= h.h1_size() lie in the leaf classes. Precedence: identity,
/// skew_identity, touches_H2, cc_other, non_cc.
HomClass classify_hom(std::span<const Vertex> grid_map, const FanGrid& l, const HGraph& h);

/// For each sampled pair (u, v): dist_H(phi u, phi v) <= dist_G(u, v) with
/// equal parity. Throws InvalidInput if either graph is not bipartite.
bool verify_parity_preservation(std::span<const Vertex> phi, const Graph& g, const Graph& h,
                                std::span<const std::pair<Vertex, Vertex>> sample_pairs);

/// Identity (or skew identity) domains: cell (i, p) may only map to H1
/// vertices labelled (., ., i, p) (resp. (., ., k-i+1, p)).
Domains identity_domains(const HGraph& h, bool skew);

/// Tally of grid homomorphisms k x r -> H1 by class, with the designated
/// cell checks used in the corner-to-corner case analysis.
struct CornerAuditReport {
    std::size_t k = 0, r = 0;
    BigCount total;
    BigCount corner_to_corner;
    BigCount identity;
    BigCount skew_identity;
    BigCount right_pair_nonfan;  // other c-c maps with (4,r), (k-3,r) on non-fan labels
    BigCount left_pair_nonfan;   // other c-c maps with (3,1), (k-2,1) on non-fan labels (and not the above)
    BigCount violations;         // other c-c maps with neither pair non-fan
    BigCount parity_inconsistent;
    std::size_t peak_states = 0;
    bool ok() const { return violations.is_zero() && parity_inconsistent.is_zero(); }
};

/// Exhaustive audit by a column transfer whose states carry class flags.
CornerAuditReport audit_corner_to_corner(const HGraph& h, std::uint64_t max_states = 20'000'000ULL);

}  // namespace homcsp
