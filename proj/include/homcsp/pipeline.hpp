#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcsp/bigcount.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp {

/// Everything the hom-counting oracle is asked about: the parameters, the
/// fan-grid L(k, r, l1, l2) and a census of H(G, k, W1, W2). The target H
/// itself is far too large to build at these parameters, so it is described
/// by its sizes and by the (compressed) graph G it is built from.
struct ReductionInstance {
    ReductionParams params;
    FanGridSpec fan_spec;
    bool fan_grid_canonical = false;  // k, r >= 8
    std::uint64_t fan_grid_vertices = 0;
    std::uint64_t fan_grid_edges = 0;
    BigCount h1_size;
    BigCount h_vertices;  // |H1| + 4 W1 + 8 W2
    CompressedGraph graph;
};

struct OracleResponse {
    BigCount value;
    bool success = true;  // false when the simulated oracle chose to fail
};

using CliqueOracle = std::function<OracleResponse(const CompressedGraph&, std::size_t k, const Rational& delta)>;
using HomOracle = std::function<OracleResponse(const ReductionInstance&, const Rational& delta)>;

struct OracleCall {
    std::string kind;  // "clique" or "hom"
    std::size_t k = 0;
    Rational tolerance;
    BigCount response;
    bool success = true;
};

struct LiftStep {
    std::size_t k = 0;  // clique size before the step
    Rational epsilon;
    BigCount t;         // blow-up factor
    BigCount s;         // universal vertices added
    BigCount vertices;  // after the step
    BigCount oracle_value;
    BigCount estimate;  // floor(M / s) / t^k, rounded to nearest
};

/// Record of one end-to-end run.
struct ReductionLog {
    std::vector<LiftStep> lifts;
    BigCount amplification;  // s of the G_s blow-up
    std::size_t isolated_edges = 0;
    std::vector<std::string> flags;
    std::vector<ReductionParams> params;
    std::vector<OracleCall> calls;
    BigCount recovered;  // floor(Q') before dividing out s^k
    BigCount estimate;

    bool all_calls_succeeded() const;
};

/// Smallest s with s^k > (1 + eps/2) / eps.
BigCount amplification_factor(std::size_t k, const Rational& eps);

/// (blowup_Gs(G, s), s).
std::pair<Graph, BigCount> amplify_cliques(const Graph& g, std::size_t k, const Rational& eps);

/// Instance handed to the hom oracle for an amplified graph with
/// k = 0 mod 4 and 2n + m > 6.
ReductionInstance make_instance(const CompressedGraph& g, std::size_t k);

/// Lifts k to the next multiple of 4 by t-blow-ups and universal vertices,
/// querying `oracle` once at the final k with tolerance eps / 3^steps.
BigCount normalize_to_multiple_of_4(const CompressedGraph& g, std::size_t k, const Rational& eps,
                                    const CliqueOracle& oracle, ReductionLog* log = nullptr);

/// Amplify, pad, choose parameters, query `oracle` at eps/2 and recover.
/// Requires k = 0 mod 4; throws HypothesisViolation otherwise.
BigCount run_reduction(const CompressedGraph& g, std::size_t k, const Rational& eps, const HomOracle& oracle,
                       ReductionLog* log = nullptr);

/// normalize_to_multiple_of_4 followed by run_reduction.
ReductionLog reduce(const Graph& g, std::size_t k, const Rational& eps, const HomOracle& oracle);

enum class MnPolicy { zero, upper_bound, random };
enum class ErrorModel { exact, uniform, adversarial_high, adversarial_low };

std::string to_string(MnPolicy p);
std::string to_string(ErrorModel m);

/// Exact value the hom oracle should approximate on a reduction instance.
using ExactHomCounter = std::function<BigCount(const ReductionInstance&)>;

/// M = mc_total(params, N) + M_n with N the exact clique count of the
/// instance graph and M_n chosen by `policy` in [0, mn_upper_bound].
ExactHomCounter synthetic_hom_counter(MnPolicy policy, std::uint64_t seed = 0);

/// Seeded perturbation of exact values. For tolerance delta it returns
/// X = f + trunc(f * a / D) with an integer |a| < delta * D, so
/// |X - f| < delta * f whenever f > 0. With probability failure_prob it
/// returns an out-of-tolerance value and reports failure. Thread-safe.
class NoiseSource {
public:
    NoiseSource(ErrorModel model, Rational failure_prob, std::uint64_t seed);
    OracleResponse perturb(const BigCount& f, const Rational& delta);

private:
    struct State;
    std::shared_ptr<State> state_;
};

HomOracle simulated_oracle(ExactHomCounter counter, ErrorModel model, Rational failure_prob, std::uint64_t seed);
CliqueOracle simulated_clique_oracle(ErrorModel model, Rational failure_prob, std::uint64_t seed);

/// Report helpers; numbers longer than max_digits are abbreviated
/// (0 keeps every digit).
nlohmann::json big_to_json(const BigCount& x, std::size_t max_digits = 0);
nlohmann::json params_to_json(const ReductionParams& p, std::size_t max_digits = 0);
nlohmann::json sandwich_to_json(const SandwichTrace& t, std::size_t max_digits = 0);
nlohmann::json log_to_json(const ReductionLog& log, std::size_t max_digits = 0);

}  // namespace homcsp
