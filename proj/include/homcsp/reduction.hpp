#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "homcsp/bigcount.hpp"
#include "homcsp/graph.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/structure.hpp"

namespace homcsp {

using Rational = mpq_class;

/// Exact value of a decimal ("0.05", "1e-3") or fraction ("1/20") string.
Rational parse_rational(std::string_view text);
/// parse_rational restricted to 0 < eps < 1.
Rational parse_epsilon(std::string_view text);
std::string to_string(const Rational& q);

/// Smallest integer t >= 1 with t^k > bound.
BigCount smallest_root_above(const Rational& bound, std::size_t k);
/// Smallest integer >= q (q >= 0).
BigCount ceil_rational(const Rational& q);

/// (n, m, k, r, l1, l2, W1, W2, T).
struct ReductionParams {
    BigCount n, m;
    std::size_t k = 0, r = 0;
    BigCount w1, w2;
    std::uint64_t l1 = 0, l2 = 0;
    std::optional<std::uint64_t> t;  // W1 = W2^T when such an integer exists
    bool canonical = true;
    bool k_multiple_of_4 = false;
    bool size_ok = false;  // 2n + m > 6

    BigCount two_n_plus_m() const { return BigCount(2) * n + m; }
    bool hypotheses_hold() const { return canonical && k_multiple_of_4 && size_ok; }
};

/// Canonical parameters: W2 = (2n+m)^2, W1 = W2^2, l2 = 8kr, l1 = 17 l2.
/// Hypothesis flags are recorded, never enforced here. Needs m >= 1, k >= 2.
ReductionParams select_params(const BigCount& n, const BigCount& m, std::size_t k);

/// Arbitrary parameters; `canonical` is set only if they coincide with
/// select_params(n, m, k).
ReductionParams custom_params(const BigCount& n, const BigCount& m, std::size_t k, const BigCount& w1,
                              const BigCount& w2, std::uint64_t l1, std::uint64_t l2);

/// Decides W1^{l1-8l2} > W2^{l1} exactly (false when l1 < 8 l2); with
/// W1 = W2^T this is l1 > 8 T l2 / (T - 1). Throws InvalidInput if W2 <= 1.
bool check_fan_precondition(const ReductionParams& p);

/// W1^{4 l1} W2^{8 l2}.
BigCount identity_weight(const ReductionParams& p);
/// 2 N identity_weight k!.
BigCount mc_total(const ReductionParams& p, const BigCount& n_cliques);
/// W1^{4 l1} W2^{6 l2} (2n+m)^{2 l2} (4W1 + 8W2 + nmkr)^{kr}.
BigCount mn_upper_bound(const ReductionParams& p);

/// Memoized identity_weight / mn_upper_bound for repeated parameters.
BigCount cached_identity_weight(const ReductionParams& p);
BigCount cached_mn_upper_bound(const ReductionParams& p);

struct InequalityStep {
    std::string name;
    std::string relation;  // "<" or "<="
    BigCount lhs, rhs;
    bool holds = false;
};

struct SandwichTrace {
    bool holds = false;
    std::vector<InequalityStep> steps;
};

/// Checks every link of the chain showing mn_upper_bound < identity_weight,
/// each as its own exact comparison. Throws HypothesisViolation unless
/// k = 0 mod 4, 2n+m > 6 and the parameters are canonical.
SandwichTrace sandwich_holds(const ReductionParams& p);

/// floor(M / (2 identity_weight k!)).
BigCount recover_clique_count(const BigCount& m_total, const ReductionParams& p);

/// (A, B) where B has the signature of `a_template` on the vertices of `h`
/// and homomorphisms A -> B coincide with homomorphisms of the Gaifman
/// graphs. Throws InvalidInput when the Gaifman graph of the template has a
/// triangle.
std::pair<RelationalStructure, RelationalStructure> lift_to_structures(const RelationalStructure& a_template,
                                                                      const Graph& h);
std::pair<RelationalStructure, RelationalStructure> lift_to_structures(const RelationalStructure& a_template,
                                                                      const HGraph& h);

}  // namespace homcsp
