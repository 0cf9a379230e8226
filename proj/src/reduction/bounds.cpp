#include <list>
#include <mutex>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp {

namespace {

struct CacheEntry {
    std::string key;
    BigCount value;
};

// Small LRU of huge values; entries are never mutated once inserted, and
// std::list keeps references stable until eviction.
class BoundCache {
public:
    template <class F>
    BigCount get(const std::string& key, F compute) {
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->key == key) {
                entries_.splice(entries_.begin(), entries_, it);
                return entries_.front().value;
            }
        }
        entries_.push_front({key, compute()});
        if (entries_.size() > kCapacity) entries_.pop_back();
        return entries_.front().value;
    }

private:
    static constexpr std::size_t kCapacity = 6;
    std::mutex mutex_;
    std::list<CacheEntry> entries_;
};

BoundCache& identity_cache() {
    static BoundCache cache;
    return cache;
}
BoundCache& mn_cache() {
    static BoundCache cache;
    return cache;
}

std::string key_of(const ReductionParams& p) {
    return p.n.str() + "/" + p.m.str() + "/" + std::to_string(p.k) + "/" + p.w1.str() + "/" + p.w2.str() + "/" +
           std::to_string(p.l1) + "/" + std::to_string(p.l2);
}

InequalityStep step(std::string name, BigCount lhs, BigCount rhs, bool strict = true) {
    InequalityStep s;
    s.name = std::move(name);
    s.relation = strict ? "<" : "<=";
    s.holds = strict ? lhs < rhs : lhs <= rhs;
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    return s;
}

}  // namespace

BigCount identity_weight(const ReductionParams& p) {
    return BigCount::pow(p.w1, 4 * p.l1) * BigCount::pow(p.w2, 8 * p.l2);
}

BigCount mc_total(const ReductionParams& p, const BigCount& n_cliques) {
    if (n_cliques.is_zero()) return BigCount(0);
    return BigCount(2) * n_cliques * cached_identity_weight(p) * BigCount::factorial(p.k);
}

BigCount mn_upper_bound(const ReductionParams& p) {
    const std::uint64_t kr = static_cast<std::uint64_t>(p.k) * p.r;
    const BigCount inner = BigCount(4) * p.w1 + BigCount(8) * p.w2 + p.n * p.m * BigCount(kr);
    return BigCount::pow(p.w1, 4 * p.l1) * BigCount::pow(p.w2, 6 * p.l2) *
           BigCount::pow(p.two_n_plus_m(), 2 * p.l2) * BigCount::pow(inner, kr);
}

BigCount cached_identity_weight(const ReductionParams& p) {
    return identity_cache().get(key_of(p), [&] { return identity_weight(p); });
}

BigCount cached_mn_upper_bound(const ReductionParams& p) {
    return mn_cache().get(key_of(p), [&] { return mn_upper_bound(p); });
}

SandwichTrace sandwich_holds(const ReductionParams& p) {
    if (!p.k_multiple_of_4) throw HypothesisViolation("k = " + std::to_string(p.k) + " is not a multiple of 4");
    if (!p.size_ok) throw HypothesisViolation("2n+m = " + p.two_n_plus_m().str() + " is not greater than 6");
    if (!p.canonical) throw HypothesisViolation("parameters are not the canonical choice");

    const std::uint64_t kr = static_cast<std::uint64_t>(p.k) * p.r;
    const BigCount base = p.two_n_plus_m();
    const BigCount six_kr = BigCount::pow(BigCount(6), kr);
    const BigCount w2_2kr = BigCount::pow(p.w2, 2 * kr);
    const BigCount w2_l2 = BigCount::pow(p.w2, p.l2);
    const BigCount base_2l2 = BigCount::pow(base, 2 * p.l2);
    const BigCount base_kr = BigCount::pow(base, kr);
    const BigCount base_4kr = BigCount::pow(base, 4 * kr);
    const BigCount base_5kr = base_4kr * base_kr;
    const BigCount six_w1_kr = BigCount::pow(BigCount(6) * p.w1, kr);
    const BigCount common = BigCount::pow(p.w1, 4 * p.l1) * BigCount::pow(p.w2, 6 * p.l2);
    const BigCount iw = cached_identity_weight(p);
    const BigCount mn = cached_mn_upper_bound(p);
    const BigCount nmkr = p.n * p.m * BigCount(kr);

    SandwichTrace trace;
    auto& s = trace.steps;
    s.push_back(step("fan precondition: W2^l1 < W1^(l1-8*l2)", BigCount::pow(p.w2, p.l1),
                     BigCount::pow(p.w1, p.l1 - 8 * p.l2)));
    s.push_back(step("8*W2 < W1", BigCount(8) * p.w2, p.w1));
    s.push_back(step("n*m*k*r < W1", nmkr, p.w1));
    s.push_back(step("4*W1 + 8*W2 + n*m*k*r < 6*W1", BigCount(4) * p.w1 + BigCount(8) * p.w2 + nmkr,
                     BigCount(6) * p.w1));
    s.push_back(step("non-c-c bound <= W1^(4*l1) * W2^(6*l2) * (2n+m)^(2*l2) * (6*W1)^(kr)", mn,
                     common * base_2l2 * six_w1_kr, false));
    s.push_back(step("(2n+m)^(2*l2) * (6*W1)^(kr) < W2^(2*l2)", base_2l2 * six_w1_kr, w2_l2 * w2_l2));
    s.push_back(step("6^(kr) * W2^(2kr) < W2^l2", six_kr * w2_2kr, w2_l2));
    s.push_back(step("6^(kr) < (2n+m)^(kr)", six_kr, base_kr));
    s.push_back(step("6^(kr) * (2n+m)^(4kr) < (2n+m)^(5kr)", six_kr * base_4kr, base_5kr));
    s.push_back(step("6^(kr) * W2^(2kr) < (2n+m)^(5kr)", six_kr * w2_2kr, base_5kr));
    s.push_back(step("(2n+m)^(5kr) <= W2^l2", base_5kr, w2_l2, false));
    s.push_back(step("non-c-c bound < W1^(4*l1) * W2^(8*l2)", mn, iw));
    trace.holds = true;
    for (const auto& st : s) trace.holds = trace.holds && st.holds;
    return trace;
}

BigCount recover_clique_count(const BigCount& m_total, const ReductionParams& p) {
    return m_total / (BigCount(2) * cached_identity_weight(p) * BigCount::factorial(p.k));
}

}  // namespace homcsp
