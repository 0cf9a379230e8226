#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "homcsp/bigcount.hpp"
#include "homcsp/graph.hpp"
#include "homcsp/structure.hpp"
#include "homcsp/treewidth.hpp"

namespace homcsp {

inline constexpr std::uint64_t kDefaultHomBudget = 200'000'000ULL;

/// Per-pattern-vertex allowed images; an empty outer vector means unrestricted.
using Domains = std::vector<std::vector<Vertex>>;

/// Calls `visit` with every homomorphism a -> b (indexed by pattern vertex)
/// whose images lie in `domains`. Always extends the unassigned vertex with
/// the fewest consistent images next. BudgetExceeded once more than `budget`
/// partial maps have been built. `visit` may return false to stop early.
void for_each_hom(const Graph& a, const Graph& b,
                  const std::function<bool(std::span<const Vertex>)>& visit,
                  const Domains& domains = {}, std::uint64_t budget = kDefaultHomBudget);

BigCount count_hom_bruteforce(const Graph& a, const Graph& b, std::uint64_t budget = kDefaultHomBudget);
BigCount count_hom_bruteforce(const RelationalStructure& a, const RelationalStructure& b,
                              std::uint64_t budget = kDefaultHomBudget);

/// Dynamic programming over a nice form of `t`, which must be a valid
/// decomposition of the Gaifman graph of the pattern. `max_table` bounds the
/// number of entries of any single table.
BigCount count_hom_treewidth(const Graph& a, const TreeDecomposition& t, const Graph& b,
                             std::uint64_t max_table = 50'000'000ULL);
BigCount count_hom_treewidth(const RelationalStructure& a, const TreeDecomposition& t,
                             const RelationalStructure& b, std::uint64_t max_table = 50'000'000ULL);

/// Target of the column transfer engine.
struct WeightedTarget {
    Graph graph;
    /// Weight per target vertex; absent means every weight is 1.
    std::optional<std::vector<BigCount>> vertex_weight;
    /// Exponent per anchored pattern cell (row-major grid id).
    std::map<Vertex, std::uint64_t> anchor_exponents;
};

struct TransferOptions {
    /// Allowed images per grid cell (row-major id); empty means unrestricted.
    Domains domains;
    /// Images restricted to target vertices with mask[x] true; empty means all.
    std::vector<bool> target_mask;
    std::uint64_t max_states = 5'000'000ULL;
};

/// Weighted count of homomorphisms from the k x r grid. Each homomorphism
/// contributes the product over anchored cells u of weight(phi(u))^exp(u).
BigCount count_grid_homs_transfer(std::size_t k, std::size_t r, const WeightedTarget& target,
                                  const TransferOptions& options = {});

}  // namespace homcsp
