#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace homcsp {

/// Lexicographic bijection between columns 1..r and the 2-subsets {a < b}
/// of [k], with r = k(k-1)/2. p = 1 is {1,2}, p = 2 is {1,3}, and so on.
class PairIndex {
public:
    explicit PairIndex(std::size_t k);

    std::size_t k() const { return k_; }
    std::size_t r() const { return pairs_.size(); }

    /// Pair for column p (1-based); throws InvalidInput when out of range.
    std::pair<std::size_t, std::size_t> rho(std::size_t p) const;
    /// Column of {a, b}; order of a, b irrelevant; throws on a == b or out of range.
    std::size_t rho_inv(std::size_t a, std::size_t b) const;
    /// i in rho(p).
    bool contains(std::size_t p, std::size_t i) const;

private:
    std::size_t k_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<bool> membership_;  // (p-1) * k + (i-1)
};

}  // namespace homcsp
