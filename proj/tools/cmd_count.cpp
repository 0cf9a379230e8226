#include <memory>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/homcount.hpp"
#include "homcsp/treewidth.hpp"

namespace homcsp::cli {

namespace {

struct CountOptions {
    std::string what;
    std::string method = "all";
    std::string pattern, target, graph;
    std::size_t k = 0;
};

// (k, r) when g is the row-major k x r grid
std::optional<std::pair<std::size_t, std::size_t>> as_grid(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 1; k <= n; ++k)
        if (n % k == 0 && grid_graph(k, n / k) == g) return std::pair{k, n / k};
    return std::nullopt;
}

Result report(const CountOptions& o, const std::vector<std::pair<std::string, BigCount>>& results,
              const std::vector<std::string>& skipped = {}) {
    if (results.empty()) throw InvalidInput("method " + o.method + " does not apply to count " + o.what);
    Result res;
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [name, value] : results) per[name] = value.str();
    bool agree = true;
    for (const auto& [name, value] : results) agree = agree && value == results.front().second;
    res.report = {{"command", "count"}, {"what", o.what}, {"methods", per}, {"agree", agree}};
    if (!skipped.empty()) res.report["skipped"] = skipped;
    std::ostringstream text;
    if (agree) {
        res.report["count"] = results.front().second.str();
        text << results.front().second.str() << "\n";
    } else {
        res.exit_code = 1;
        text << "engines disagree:\n";
        for (const auto& [name, value] : results) text << "  " << name << ": " << value.str() << "\n";
    }
    res.text = text.str();
    return res;
}

Result count_hom(const CountOptions& o, std::uint64_t budget) {
    if (o.pattern.empty() || o.target.empty()) throw InvalidInput("count hom needs --pattern and --target");
    auto use = [&](const std::string& m) { return o.method == "all" || o.method == m; };
    std::vector<std::pair<std::string, BigCount>> results;
    if (is_structure_file(o.pattern) || is_structure_file(o.target)) {
        const RelationalStructure a = load_structure(o.pattern);
        const RelationalStructure b = load_structure(o.target);
        if (o.method == "transfer") throw InvalidInput("the transfer engine counts grid patterns on graphs only");
        if (use("brute")) results.emplace_back("brute", count_hom_bruteforce(a, b, budget));
        if (use("dp")) {
            const auto t = decompose_heuristic(gaifman_graph(a), EliminationStrategy::min_fill);
            results.emplace_back("dp", count_hom_treewidth(a, t, b));
        }
        return report(o, results);
    }
    const Graph a = load_graph(o.pattern);
    const Graph b = load_graph(o.target);
    std::vector<std::string> skipped;
    if (use("brute")) results.emplace_back("brute", count_hom_bruteforce(a, b, budget));
    if (use("dp")) results.emplace_back("dp", count_hom_treewidth(a, decompose_heuristic(a, EliminationStrategy::min_fill), b));
    if (use("transfer")) {
        const auto dims = as_grid(a);
        if (dims) {
            TransferOptions opt;
            opt.max_states = budget;
            results.emplace_back("transfer", count_grid_homs_transfer(dims->first, dims->second, {b, std::nullopt, {}}, opt));
        } else if (o.method == "transfer") {
            throw InvalidInput("the transfer engine needs a row-major grid pattern");
        } else {
            skipped.push_back("transfer: pattern is not a row-major grid");
        }
    }
    return report(o, results, skipped);
}

Result count_clique(const CountOptions& o, std::uint64_t budget) {
    if (o.graph.empty() || o.k == 0) throw InvalidInput("count clique needs --graph and a positive --k");
    if (o.method == "transfer") throw InvalidInput("the transfer engine does not count cliques");
    const Graph g = load_graph(o.graph);
    auto use = [&](const std::string& m) { return o.method == "all" || o.method == m; };
    std::vector<std::pair<std::string, BigCount>> results;
    if (use("brute")) results.emplace_back("brute", count_cliques_bruteforce(g, o.k, budget));
    if (use("dp")) {
        // homomorphisms from K_k into a loopless graph are ordered k-cliques
        const Graph kk = complete_graph(o.k);
        const BigCount ordered = count_hom_treewidth(kk, decompose_heuristic(kk, EliminationStrategy::min_fill), g);
        results.emplace_back("dp", ordered / BigCount::factorial(o.k));
    }
    if (use("compressed")) results.emplace_back("compressed", CompressedGraph(g).count_cliques(o.k));
    return report(o, results);
}

}  // namespace

void add_count(CLI::App& app, Globals& globals, Action& action) {
    auto o = std::make_shared<CountOptions>();
    auto* cmd = app.add_subcommand("count", "Count homomorphisms or cliques with one or more engines");
    cmd->add_option("what", o->what, "hom or clique")->required()->check(CLI::IsMember({"hom", "clique"}));
    cmd->add_option("--method", o->method, "Engine; 'all' cross-checks every applicable engine")
        ->check(CLI::IsMember({"brute", "dp", "transfer", "compressed", "all"}))
        ->capture_default_str();
    cmd->add_option("--pattern", o->pattern, "Pattern edge list (or structure .json)");
    cmd->add_option("--target", o->target, "Target edge list (or structure .json)");
    cmd->add_option("--graph", o->graph, "Graph for clique counting");
    cmd->add_option("--k", o->k, "Clique size");
    cmd->callback([o, &globals, &action] {
        action = [o, &globals] {
            const std::uint64_t budget = effective_budget(globals);
            return o->what == "hom" ? count_hom(*o, budget) : count_clique(*o, budget);
        };
    });
}

}  // namespace homcsp::cli
