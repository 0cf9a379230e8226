#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp {

namespace {

// Integer T with w1 = w2^T, if any.
std::optional<std::uint64_t> exact_log(const BigCount& w1, const BigCount& w2) {
    if (w2 <= BigCount(1) || w1.is_zero()) return std::nullopt;
    BigCount power(1);
    std::uint64_t t = 0;
    while (power < w1) {
        power *= w2;
        ++t;
    }
    if (power == w1) return t;
    return std::nullopt;
}

void fill_flags(ReductionParams& p) {
    p.k_multiple_of_4 = p.k % 4 == 0;
    p.size_ok = p.two_n_plus_m() > BigCount(6);
    p.t = exact_log(p.w1, p.w2);
}

}  // namespace

ReductionParams select_params(const BigCount& n, const BigCount& m, std::size_t k) {
    if (m.is_zero()) throw InvalidInput("parameter selection needs at least one edge");
    if (k < 2) throw InvalidInput("parameter selection needs k >= 2");
    ReductionParams p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.r = k * (k - 1) / 2;
    const BigCount base = p.two_n_plus_m();
    p.w2 = base * base;
    p.w1 = p.w2 * p.w2;
    p.l2 = 8 * static_cast<std::uint64_t>(k) * p.r;
    p.l1 = 17 * p.l2;
    p.canonical = true;
    fill_flags(p);
    return p;
}

ReductionParams custom_params(const BigCount& n, const BigCount& m, std::size_t k, const BigCount& w1,
                              const BigCount& w2, std::uint64_t l1, std::uint64_t l2) {
    if (k < 2) throw InvalidInput("parameters need k >= 2");
    ReductionParams p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.r = k * (k - 1) / 2;
    p.w1 = w1;
    p.w2 = w2;
    p.l1 = l1;
    p.l2 = l2;
    fill_flags(p);
    p.canonical = false;
    if (!m.is_zero()) {
        const ReductionParams c = select_params(n, m, k);
        p.canonical = c.w1 == w1 && c.w2 == w2 && c.l1 == l1 && c.l2 == l2;
    }
    return p;
}

bool check_fan_precondition(const ReductionParams& p) {
    if (p.w2 <= BigCount(1)) throw InvalidInput("fan precondition needs W2 > 1, got " + p.w2.str());
    if (p.l1 < 8 * p.l2) return false;
    return BigCount::pow(p.w1, p.l1 - 8 * p.l2) > BigCount::pow(p.w2, p.l1);
}

}  // namespace homcsp
