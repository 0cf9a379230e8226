#include <string>
#include <unordered_map>

#include "homcsp/errors.hpp"
#include "homcsp/homcount.hpp"

namespace homcsp {

namespace {

struct ColumnHash {
    std::size_t operator()(const std::vector<Vertex>& c) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Vertex x : c) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

using StateMap = std::unordered_map<std::vector<Vertex>, BigCount, ColumnHash>;

}  // namespace

BigCount count_grid_homs_transfer(std::size_t k, std::size_t r, const WeightedTarget& target,
                                  const TransferOptions& options) {
    if (k == 0 || r == 0) throw InvalidInput("grid dimensions must be positive");
    const Graph& h = target.graph;
    const std::size_t nt = h.vertex_count();
    if (target.vertex_weight && target.vertex_weight->size() != nt)
        throw InvalidInput("one weight per target vertex required");
    if (!options.domains.empty() && options.domains.size() != k * r)
        throw InvalidInput("one domain per grid cell required");
    if (!options.target_mask.empty() && options.target_mask.size() != nt)
        throw InvalidInput("target mask must cover every target vertex");

    // Sweep columns of height `rows`; transpose when k > r.
    const bool transpose = k > r;
    const std::size_t rows = transpose ? r : k;
    const std::size_t cols = transpose ? k : r;
    auto cell_of = [&](Vertex original) -> std::size_t {
        const std::size_t i = original / r, p = original % r;  // 0-based
        const std::size_t ri = transpose ? p : i, rp = transpose ? i : p;
        return rp * rows + ri;  // column-major index in the sweep
    };

    std::vector<std::vector<char>> allowed(rows * cols);
    for (std::size_t v = 0; v < options.domains.size(); ++v) {
        auto& mask = allowed[cell_of(static_cast<Vertex>(v))];
        mask.assign(nt, 0);
        for (Vertex x : options.domains[v]) {
            if (x >= nt) throw InvalidInput("domain mentions a vertex outside the target");
            mask[x] = 1;
        }
    }
    std::vector<const std::vector<BigCount>*> factor(rows * cols, nullptr);
    std::map<std::uint64_t, std::vector<BigCount>> powers;
    for (const auto& [cell, exponent] : target.anchor_exponents) {
        if (cell >= k * r) throw InvalidInput("anchor " + std::to_string(cell) + " is not a grid cell");
        if (!target.vertex_weight) continue;
        auto [it, fresh] = powers.try_emplace(exponent);
        if (fresh) {
            it->second.reserve(nt);
            for (const auto& w : *target.vertex_weight) it->second.push_back(BigCount::pow(w, exponent));
        }
        factor[cell_of(cell)] = &it->second;
    }
    auto usable = [&](std::size_t cell, Vertex x) {
        if (!options.target_mask.empty() && !options.target_mask[x]) return false;
        return allowed[cell].empty() || allowed[cell][x];
    };

    std::vector<Vertex> all(nt);
    for (std::size_t x = 0; x < nt; ++x) all[x] = static_cast<Vertex>(x);

    StateMap current, next;
    std::vector<Vertex> column(rows);
    const BigCount one(1);

    // Enumerates columns compatible with `prev` (or any column when null),
    // adding `base * weight(column)` into `out`.
    std::function<void(std::size_t, std::size_t, const std::vector<Vertex>*, const BigCount&, StateMap&)> fill =
        [&](std::size_t p, std::size_t i, const std::vector<Vertex>* prev, const BigCount& acc, StateMap& out) {
            if (i == rows) {
                auto [it, fresh] = out.try_emplace(column, acc);
                if (!fresh) it->second += acc;
                else if (out.size() > options.max_states)
                    throw BudgetExceeded("column transfer exceeded " + std::to_string(options.max_states) + " states");
                return;
            }
            const std::size_t cell = p * rows + i;
            std::span<const Vertex> candidates =
                prev ? h.neighbors((*prev)[i]) : (i > 0 ? h.neighbors(column[i - 1]) : std::span<const Vertex>(all));
            const bool check_up = prev && i > 0;
            for (Vertex x : candidates) {
                if (!usable(cell, x)) continue;
                if (check_up && !h.has_edge(column[i - 1], x)) continue;
                column[i] = x;
                if (factor[cell]) {
                    const BigCount& f = (*factor[cell])[x];
                    if (f.is_zero()) continue;
                    fill(p, i + 1, prev, acc * f, out);
                } else {
                    fill(p, i + 1, prev, acc, out);
                }
            }
        };

    fill(0, 0, nullptr, one, current);
    for (std::size_t p = 1; p < cols; ++p) {
        next.clear();
        for (const auto& [state, value] : current) fill(p, 0, &state, value, next);
        current.swap(next);
    }
    BigCount total;
    for (const auto& [state, value] : current) total += value;
    return total;
}

}  // namespace homcsp
