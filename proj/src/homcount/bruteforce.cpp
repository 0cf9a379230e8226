#include <algorithm>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/homcount.hpp"

namespace homcsp {

namespace {

[[noreturn]] void over_budget(std::uint64_t budget) {
    throw BudgetExceeded("brute-force enumeration exceeded budget of " + std::to_string(budget) + " partial maps");
}

}  // namespace

void for_each_hom(const Graph& a, const Graph& b,
                  const std::function<bool(std::span<const Vertex>)>& visit, const Domains& domains,
                  std::uint64_t budget) {
    const std::size_t n = a.vertex_count();
    if (!domains.empty() && domains.size() != n) throw InvalidInput("one domain per pattern vertex required");
    std::vector<std::vector<bool>> allowed;
    if (!domains.empty()) {
        allowed.assign(n, std::vector<bool>(b.vertex_count(), false));
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex x : domains[v]) {
                if (x >= b.vertex_count()) throw InvalidInput("domain mentions a vertex outside the target");
                allowed[v][x] = true;
            }
    }
    std::vector<Vertex> all(b.vertex_count());
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = static_cast<Vertex>(x);

    // Dynamic most-constrained-first order: the next pattern vertex is the
    // unassigned one with the fewest images consistent with its assigned
    // neighbours; a vertex with none ends the branch at once.
    std::vector<Vertex> image(n, 0);
    std::vector<char> assigned(n, 0);
    std::uint64_t steps = 0;
    bool stop = false;

    auto consistent = [&](Vertex v, Vertex x, Vertex skip) {
        if (!allowed.empty() && !allowed[v][x]) return false;
        for (Vertex w : a.neighbors(v))
            if (assigned[w] && w != skip && !b.has_edge(x, image[w])) return false;
        return true;
    };
    // assigned neighbour whose image has the smallest degree, or -1
    auto pivot = [&](Vertex v) -> long {
        long best = -1;
        for (Vertex w : a.neighbors(v))
            if (assigned[w] && (best < 0 || b.degree(image[w]) < b.degree(image[static_cast<Vertex>(best)])))
                best = w;
        return best;
    };

    std::function<void(std::size_t)> go = [&](std::size_t depth) {
        if (stop) return;
        if (depth == n) {
            if (!visit(image)) stop = true;
            return;
        }
        long chosen = -1, chosen_pivot = -1;
        std::size_t fewest = SIZE_MAX;
        for (Vertex v = 0; v < n && fewest > 0; ++v) {
            if (assigned[v]) continue;
            const long u = pivot(v);
            if (u < 0) continue;
            std::size_t count = 0;
            for (Vertex x : b.neighbors(image[static_cast<Vertex>(u)]))
                if (consistent(v, x, static_cast<Vertex>(u)) && ++count >= fewest) break;
            if (count < fewest) {
                fewest = count;
                chosen = v;
                chosen_pivot = u;
            }
        }
        if (fewest == 0) return;
        if (chosen < 0) {
            // no assigned neighbours anywhere: start a new component at its most restricted vertex
            std::size_t smallest = SIZE_MAX;
            for (Vertex v = 0; v < n; ++v) {
                if (assigned[v]) continue;
                const std::size_t size = domains.empty() ? all.size() : domains[v].size();
                if (size < smallest) {
                    smallest = size;
                    chosen = v;
                }
            }
        }
        const Vertex v = static_cast<Vertex>(chosen);
        const std::span<const Vertex> pool =
            chosen_pivot >= 0 ? b.neighbors(image[static_cast<Vertex>(chosen_pivot)]) : std::span<const Vertex>(all);
        const Vertex skip = chosen_pivot >= 0 ? static_cast<Vertex>(chosen_pivot) : static_cast<Vertex>(n);
        std::vector<Vertex> candidates;
        for (Vertex x : pool)
            if (consistent(v, x, skip)) {
                if (++steps > budget) over_budget(budget);
                candidates.push_back(x);
            }
        assigned[v] = 1;
        for (Vertex x : candidates) {
            image[v] = x;
            go(depth + 1);
            if (stop) break;
        }
        assigned[v] = 0;
    };
    go(0);
}

BigCount count_hom_bruteforce(const Graph& a, const Graph& b, std::uint64_t budget) {
    BigCount total;
    const BigCount one(1);
    for_each_hom(a, b, [&](std::span<const Vertex>) {
        total += one;
        return true;
    }, {}, budget);
    return total;
}

BigCount count_hom_bruteforce(const RelationalStructure& a, const RelationalStructure& b, std::uint64_t budget) {
    if (!(a.signature() == b.signature())) throw InvalidInput("structures have different signatures");
    const std::size_t n = a.universe_size();
    const std::size_t m = b.universe_size();
    // each tuple is checked once its last element (in id order) is assigned
    struct Check {
        const std::set<Tuple>* target;
        const Tuple* tuple;
    };
    std::vector<std::vector<Check>> checks(n);
    for (const auto& [name, tuples] : a.relations()) {
        const auto* target = &b.relation(name);
        for (const auto& t : tuples) {
            const Vertex last = *std::max_element(t.begin(), t.end());
            checks[last].push_back({target, &t});
        }
    }
    std::vector<Vertex> image(n, 0);
    Tuple mapped;
    BigCount total;
    const BigCount one(1);
    std::uint64_t steps = 0;
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == n) {
            total += one;
            return;
        }
        for (Vertex x = 0; x < m; ++x) {
            if (++steps > budget) over_budget(budget);
            image[v] = x;
            bool ok = true;
            for (const auto& c : checks[v]) {
                mapped.clear();
                for (Vertex e : *c.tuple) mapped.push_back(image[e]);
                if (!c.target->count(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(v + 1);
        }
    };
    go(0);
    return total;
}

}  // namespace homcsp
