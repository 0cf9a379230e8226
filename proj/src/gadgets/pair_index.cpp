#include "homcsp/pair_index.hpp"

#include <string>

#include "homcsp/errors.hpp"

namespace homcsp {

PairIndex::PairIndex(std::size_t k) : k_(k) {
    if (k < 2) throw InvalidInput("pair index needs k >= 2");
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = a + 1; b <= k; ++b) pairs_.emplace_back(a, b);
    membership_.assign(pairs_.size() * k, false);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        membership_[p * k + pairs_[p].first - 1] = true;
        membership_[p * k + pairs_[p].second - 1] = true;
    }
}

std::pair<std::size_t, std::size_t> PairIndex::rho(std::size_t p) const {
    if (p < 1 || p > pairs_.size())
        throw InvalidInput("column " + std::to_string(p) + " out of range 1.." + std::to_string(pairs_.size()));
    return pairs_[p - 1];
}

std::size_t PairIndex::rho_inv(std::size_t a, std::size_t b) const {
    if (a == b || a < 1 || b < 1 || a > k_ || b > k_)
        throw InvalidInput("{" + std::to_string(a) + "," + std::to_string(b) + "} is not a pair of [" +
                           std::to_string(k_) + "]");
    if (a > b) std::swap(a, b);
    // pairs starting with x < a contribute (k - x) each
    const std::size_t before = (a - 1) * k_ - (a - 1) * a / 2;
    return before + (b - a);
}

bool PairIndex::contains(std::size_t p, std::size_t i) const {
    if (p < 1 || p > pairs_.size() || i < 1 || i > k_)
        throw InvalidInput("pair membership query out of range");
    return membership_[(p - 1) * k_ + (i - 1)];
}

}  // namespace homcsp
