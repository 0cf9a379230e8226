#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "homcsp/classify.hpp"
#include "homcsp/errors.hpp"

namespace homcsp {

namespace {

enum Flag : Vertex {
    kIdentity = 1,
    kSkew = 2,
    kLeftCorners = 4,    // phi(1,1) and phi(k,1) corner-labelled
    kLeftNonfan = 8,     // phi(3,1) and phi(k-2,1) not fan-labelled
    kParityOdd = 16,     // label parity differs from cell parity
    kParityBroken = 32,
};

struct KeyHash {
    std::size_t operator()(const std::vector<Vertex>& c) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Vertex x : c) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

}  // namespace

CornerAuditReport audit_corner_to_corner(const HGraph& h, std::uint64_t max_states) {
    const std::size_t k = h.k(), r = h.r();
    if (k < 4) throw InvalidInput("corner-to-corner audit needs k >= 4");
    const Graph& g = h.h1();
    CornerAuditReport report;
    report.k = k;
    report.r = r;

    auto parity_of = [&](Vertex x, std::size_t i, std::size_t p) {
        const auto& lab = h.label(x);
        return static_cast<Vertex>(((lab.i + lab.p) ^ (i + p)) & 1);
    };

    using States = std::unordered_map<std::vector<Vertex>, BigCount, KeyHash>;
    States current, next;
    std::vector<Vertex> key(k + 1);
    std::vector<Vertex> all(g.vertex_count());
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = static_cast<Vertex>(x);

    // p is 1-based; i is 0-based here.
    std::function<void(std::size_t, std::size_t, const std::vector<Vertex>*, Vertex, const BigCount&, States&)> fill =
        [&](std::size_t p, std::size_t i, const std::vector<Vertex>* prev, Vertex flags, const BigCount& value,
            States& out) {
            if (i == k) {
                key[k] = flags;
                auto [it, fresh] = out.try_emplace(key, value);
                if (!fresh) it->second += value;
                else if (out.size() > max_states)
                    throw BudgetExceeded("audit exceeded " + std::to_string(max_states) + " states");
                return;
            }
            std::span<const Vertex> candidates =
                prev ? g.neighbors((*prev)[i]) : (i > 0 ? g.neighbors(key[i - 1]) : std::span<const Vertex>(all));
            for (Vertex x : candidates) {
                if (prev && i > 0 && !g.has_edge(key[i - 1], x)) continue;
                key[i] = x;
                const auto& lab = h.label(x);
                Vertex f = flags;
                if (lab.i != i + 1 || lab.p != p) f &= ~Vertex{kIdentity};
                if (lab.i != k - i || lab.p != p) f &= ~Vertex{kSkew};
                const Vertex odd = parity_of(x, i + 1, p);
                if (p == 1 && i == 0) f = (f & ~Vertex{kParityOdd}) | (odd ? Vertex{kParityOdd} : 0);
                else if (odd != ((f & kParityOdd) ? 1u : 0u)) f |= kParityBroken;
                if (p == 1) {
                    if ((i == 0 || i == k - 1) && h.corner_class(x) < 0) f &= ~Vertex{kLeftCorners};
                    if ((i == 2 || i == k - 3) && h.is_fan_labelled(x)) f &= ~Vertex{kLeftNonfan};
                }
                fill(p, i + 1, prev, f, value, out);
            }
        };

    const BigCount one(1);
    fill(1, 0, nullptr, kIdentity | kSkew | kLeftCorners | kLeftNonfan, one, current);
    report.peak_states = current.size();
    for (std::size_t p = 2; p <= r; ++p) {
        next.clear();
        for (const auto& [state, value] : current) fill(p, 0, &state, state[k], value, next);
        current.swap(next);
        report.peak_states = std::max(report.peak_states, current.size());
    }
    for (const auto& [state, value] : current) {
        const Vertex f = state[k];
        report.total += value;
        if (f & kParityBroken) report.parity_inconsistent += value;
        const bool cc = (f & kLeftCorners) && h.corner_class(state[0]) >= 0 && h.corner_class(state[k - 1]) >= 0;
        if (!cc) continue;
        report.corner_to_corner += value;
        if (f & kIdentity) {
            report.identity += value;
        } else if (f & kSkew) {
            report.skew_identity += value;
        } else if (!h.is_fan_labelled(state[3]) && !h.is_fan_labelled(state[k - 4])) {
            report.right_pair_nonfan += value;
        } else if (f & kLeftNonfan) {
            report.left_pair_nonfan += value;
        } else {
            report.violations += value;
        }
    }
    return report;
}

}  // namespace homcsp
