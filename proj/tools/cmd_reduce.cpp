#include <memory>
#include <sstream>

#include "cli.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/pipeline.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp::cli {

namespace {

struct ReduceOptions {
    std::string graph;
    std::size_t k = 0;
    std::string epsilon = "0.5";
    std::string oracle = "exact";
    std::uint64_t seed = 0;
    std::string failure_prob;
    std::size_t max_digits = 64;
};

Result run_reduce(const ReduceOptions& o) {
    if (o.graph.empty() || o.k == 0) throw InvalidInput("reduce needs --graph and a positive --k");
    const Graph g = load_graph(o.graph);
    const Rational eps = parse_epsilon(o.epsilon);

    HomOracle oracle;
    Rational failure(0);
    if (o.oracle == "exact") {
        oracle = simulated_oracle(synthetic_hom_counter(MnPolicy::zero), ErrorModel::exact, failure, o.seed);
    } else if (o.oracle == "noisy") {
        failure = o.failure_prob.empty() ? Rational(1, 4) : parse_rational(o.failure_prob);
        oracle = simulated_oracle(synthetic_hom_counter(MnPolicy::random, o.seed), ErrorModel::uniform, failure,
                                  o.seed);
    } else {
        oracle = simulated_oracle(synthetic_hom_counter(MnPolicy::upper_bound), ErrorModel::adversarial_high, failure,
                                  o.seed);
    }

    const ReductionLog log = reduce(g, o.k, eps, oracle);
    nlohmann::json sandwiches = nlohmann::json::array();
    bool chain = true;
    for (const auto& p : log.params) {
        const SandwichTrace t = sandwich_holds(p);
        chain = chain && t.holds;
        sandwiches.push_back(sandwich_to_json(t, o.max_digits));
    }

    Result res;
    res.report = {{"command", "reduce"},
                  {"graph", {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}}},
                  {"k", o.k},
                  {"epsilon", to_string(eps)},
                  {"oracle", o.oracle},
                  {"seed", o.seed},
                  {"failure_prob", to_string(failure)},
                  {"log", log_to_json(log, o.max_digits)},
                  {"inequality_chain", sandwiches},
                  {"estimate", log.estimate.str()}};
    std::ostringstream text;
    text << log.estimate.str() << "\n";
    if (!log.all_calls_succeeded()) text << "warning: at least one oracle call reported failure\n";
    for (const auto& f : log.flags) text << "note: " << f << "\n";
    res.text = text.str();
    res.exit_code = chain ? 0 : 1;
    return res;
}

}  // namespace

void add_reduce(CLI::App& app, Globals&, Action& action) {
    auto o = std::make_shared<ReduceOptions>();
    auto* cmd = app.add_subcommand("reduce", "Estimate k-cliques through the homomorphism-count reduction");
    cmd->add_option("--graph", o->graph, "Input edge list")->required();
    cmd->add_option("--k", o->k, "Clique size")->required();
    cmd->add_option("--epsilon", o->epsilon, "Relative error, 0 < epsilon < 1")->capture_default_str();
    cmd->add_option("--oracle", o->oracle, "Simulated homomorphism oracle")
        ->check(CLI::IsMember({"exact", "noisy", "adversarial"}))
        ->capture_default_str();
    cmd->add_option("--seed", o->seed, "Seed for the noisy oracle")->capture_default_str();
    cmd->add_option("--failure-prob", o->failure_prob, "Per-call failure probability for the noisy oracle (<= 1/4)");
    cmd->add_option("--max-digits", o->max_digits, "Abbreviate integers longer than this in JSON (0: never)")
        ->capture_default_str();
    cmd->callback([o, &action] { action = [o] { return run_reduce(*o); }; });
}

}  // namespace homcsp::cli
