// Acceptance run: one line per criterion, exit status 1 if any criterion fails.
// Usage: acceptance [id...]   (no ids: run all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "homcsp/classify.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/homcount.hpp"
#include "homcsp/minor.hpp"
#include "homcsp/pipeline.hpp"
#include "homcsp/reduction.hpp"
#include "homcsp/treewidth.hpp"
#include "support.hpp"

using namespace homcsp;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph random_graph_with(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density(0.2, 0.8);
    return random_graph(n, density(rng), rng);
}

BigCount loose_w(const Graph& g) { return BigCount(2 * (g.vertex_count() + g.edge_count()) + 1); }

// ---------------------------------------------------------------------------

Outcome engine_agreement() {
    std::mt19937_64 rng(20240601);
    std::size_t instances = 0, disagreements = 0;
    std::ostringstream first;
    auto note = [&](const std::string& what) {
        if (disagreements++ == 0) first << what;
    };
    while (instances < 200) {
        const Graph a = random_graph_with(1 + rng() % 8, rng);
        const auto t = decompose_heuristic(a, EliminationStrategy::min_fill);
        if (width(t) > 3) continue;
        const Graph b = random_graph_with(1 + rng() % 6, rng);
        const BigCount brute = count_hom_bruteforce(a, b);
        if (count_hom_treewidth(a, t, b) != brute) note("random pattern " + std::to_string(instances));

        // a grid pattern on the same target goes through all three engines
        const std::size_t k = 1 + rng() % 3, r = 1 + rng() % (8 / k);
        const Graph grid = grid_graph(k, r);
        const BigCount gb = count_hom_bruteforce(grid, b);
        const BigCount gd = count_hom_treewidth(grid, grid_path_decomposition(k, r), b);
        const BigCount gt = count_grid_homs_transfer(k, r, {b, std::nullopt, {}});
        if (gb != gd || gb != gt) note("grid " + std::to_string(k) + "x" + std::to_string(r));
        ++instances;
    }
    bool fixed = count_hom_bruteforce(cycle_graph(4), complete_graph(3)) == BigCount(18) &&
                 count_hom_treewidth(grid_graph(2, 2), grid_path_decomposition(2, 2), complete_graph(3)) ==
                     BigCount(18) &&
                 count_grid_homs_transfer(2, 2, {complete_graph(3), std::nullopt, {}}) == BigCount(18);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph h = random_graph_with(1 + rng() % 6, rng);
        const WeightedTarget t{h, std::nullopt, {}};
        const BigCount edges2(2 * h.edge_count()), verts(h.vertex_count());
        fixed = fixed && count_hom_bruteforce(complete_graph(2), h) == edges2 &&
                count_hom_treewidth(grid_graph(1, 2), grid_path_decomposition(1, 2), h) == edges2 &&
                count_grid_homs_transfer(1, 2, t) == edges2 && count_hom_bruteforce(Graph(1), h) == verts &&
                count_hom_treewidth(Graph(1), grid_path_decomposition(1, 1), h) == verts &&
                count_grid_homs_transfer(1, 1, t) == verts;
    }
    std::ostringstream d;
    d << instances << " random instances (+" << instances << " grid patterns), " << disagreements
      << " disagreements; fixed cases " << (fixed ? "ok" : "FAILED");
    if (disagreements) d << "; first: " << first.str();
    return {disagreements == 0 && fixed, d.str()};
}

Outcome identity_bijection() {
    std::size_t graphs = 0, failures = 0;
    std::string first;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : testing::all_graphs_up_to_iso(n)) {
            if (!testing::is_connected(g)) continue;
            ++graphs;
            for (std::size_t k : {3, 4}) {
                const BigCount expected = count_cliques_bruteforce(g, k) * BigCount::factorial(k);
                BigCount got(0);  // K1 has no (v, e) pairs, so H1 is empty
                if (g.edge_count() > 0) {
                    const HGraph h = build_h_graph(g, k, loose_w(g), loose_w(g));
                    TransferOptions opt;
                    opt.domains = identity_domains(h, false);
                    got = count_grid_homs_transfer(k, h.r(), {h.h1(), std::nullopt, {}}, opt);
                }
                if (got != expected && failures++ == 0)
                    first = "n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()) + " k=" +
                            std::to_string(k) + ": " + got.str() + " vs " + expected.str();
            }
        }
    return {failures == 0, std::to_string(graphs) + " connected graphs x k in {3,4}, " + std::to_string(failures) +
                               " mismatches" + (failures ? "; first: " + first : "")};
}

Outcome weight_formulas() {
    // k = 6 is the smallest row count with twelve distinct fan positions
    struct Case {
        std::size_t n, l1, l2;
    };
    std::ostringstream d;
    bool pass = true;
    for (const Case c : {Case{6, 1, 1}, Case{7, 1, 1}, Case{6, 2, 1}, Case{5, 1, 2}}) {
        const Graph g = complete_graph(c.n);
        const std::size_t k = 6;
        const BigCount w2 = loose_w(g), w1 = w2 + BigCount(3);
        const HGraph h = build_h_graph(g, k, w1, w2);
        const FanGrid l = build_fan_grid({k, h.r(), c.l1, c.l2, true});
        const DegreeAudit audit = audit_degrees(h);
        const ReductionParams p =
            custom_params(BigCount(g.vertex_count()), BigCount(g.edge_count()), k, w1, w2, c.l1, c.l2);
        const BigCount iw = identity_weight(p);

        // enumerate every map whose cells stay in layer i or k-i+1, classify, and sum
        Domains both = identity_domains(h, false);
        const Domains skew = identity_domains(h, true);
        for (std::size_t v = 0; v < both.size(); ++v) {
            both[v].insert(both[v].end(), skew[v].begin(), skew[v].end());
            std::sort(both[v].begin(), both[v].end());
            both[v].erase(std::unique(both[v].begin(), both[v].end()), both[v].end());
        }
        std::size_t maps = 0, bad_weight = 0, other = 0;
        BigCount sum(0);
        for_each_hom(grid_graph(k, h.r()), h.h1(), [&](std::span<const Vertex> phi) {
            ++maps;
            const HomClass cls = classify_hom(phi, l, h);
            if (cls != HomClass::identity && cls != HomClass::skew_identity) {
                ++other;
                return true;
            }
            const BigCount w = extension_weight(phi, l, h);
            if (w != iw) ++bad_weight;
            sum += w;
            return true;
        }, both);
        const BigCount n_cliques = count_cliques_bruteforce(g, k);
        const bool ok = audit.ok && bad_weight == 0 && sum == mc_total(p, n_cliques);
        pass = pass && ok;
        d << "K" << c.n << " l1=" << c.l1 << " l2=" << c.l2 << ": " << maps << " maps (" << other
          << " other), weight " << (bad_weight ? "MISMATCH" : "ok") << ", total " << (ok ? "ok" : "MISMATCH")
          << "; ";
    }
    return {pass, d.str()};
}

std::vector<std::pair<std::string, Graph>> sandwich_instances() {
    std::vector<std::pair<std::string, Graph>> out{
        {"K4", complete_graph(4)}, {"K5", complete_graph(5)}, {"K8", complete_graph(8)}};
    std::mt19937_64 rng(4242);
    while (out.size() < 13) {
        const std::size_t n = 4 + rng() % 5;
        const Graph g = random_graph_with(n, rng);
        if (g.edge_count() == 0 || 2 * n + g.edge_count() <= 6) continue;
        out.emplace_back("G(" + std::to_string(n) + "," + std::to_string(g.edge_count()) + ")", g);
    }
    return out;
}

constexpr double kSandwichInstanceLimit = 120.0;

Outcome sandwich_chain() {
    std::size_t runs = 0, failed_steps = 0;
    double slowest = 0;
    std::string first;
    for (const auto& [name, g] : sandwich_instances())
        for (std::size_t k : {4, 8}) {
            const auto t0 = Clock::now();
            const ReductionParams p = select_params(BigCount(g.vertex_count()), BigCount(g.edge_count()), k);
            const SandwichTrace trace = sandwich_holds(p);
            for (const auto& s : trace.steps) {
                const bool independent = s.relation == "<" ? s.lhs < s.rhs : s.lhs <= s.rhs;
                if ((!s.holds || !independent) && failed_steps++ == 0) first = name + " k=" + std::to_string(k) + ": " + s.name;
            }
            if (!trace.holds && failed_steps == 0) ++failed_steps;
            slowest = std::max(slowest, seconds_since(t0));
            ++runs;
        }
    std::ostringstream d;
    d << runs << " instances x 12 steps, " << failed_steps << " failing steps, slowest instance " << slowest
      << " s (limit " << kSandwichInstanceLimit << " s)";
    if (failed_steps) d << "; first: " << first;
    return {failed_steps == 0 && slowest < kSandwichInstanceLimit, d.str()};
}

Outcome adversarial_recovery() {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(77);
    std::size_t checks = 0, failures = 0;
    for (const auto& [name, g] : sandwich_instances())
        for (std::size_t k : {4, 8}) {
            const ReductionParams p = select_params(BigCount(g.vertex_count()), BigCount(g.edge_count()), k);
            const BigCount n = count_cliques_bruteforce(g, k);
            const BigCount base = mc_total(p, n);
            const BigCount bound = cached_mn_upper_bound(p);
            std::vector<BigCount> xs{BigCount(0), bound};
            for (int i = 0; i < 20; ++i) xs.emplace_back(mpz_class(rng.get_z_range(bound.raw()) + 1));
            for (const auto& x : xs) {
                ++checks;
                if (recover_clique_count(base + x, p) != n) ++failures;
            }
        }
    return {failures == 0, std::to_string(checks) + " recoveries, " + std::to_string(failures) + " wrong"};
}

Outcome blowup_identities() {
    std::mt19937_64 rng(6006);
    std::size_t checks = 0, failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph_with(1 + rng() % 7, rng);
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t k = 2; k <= 4; ++k) {
                const BigCount n = count_cliques_bruteforce(g, k);
                const BigCount sk = BigCount::pow(BigCount(s), k);
                failures += count_cliques_bruteforce(blowup_Gs(g, s), k) != sk * n;
                failures += count_cliques_bruteforce(add_universal_vertices(g, s), k + 1) !=
                            BigCount(s) * n + count_cliques_bruteforce(g, k + 1);
                failures += count_cliques_bruteforce(blowup_Gk(g, s), k) != sk * n;
                checks += 3;
            }
    }
    return {failures == 0, std::to_string(checks) + " identities over 100 graphs, " + std::to_string(failures) +
                               " failures"};
}

Outcome minor_models() {
    std::size_t models = 0, failures = 0;
    std::string first;
    for (std::size_t k = 8; k <= 10; ++k)
        for (std::size_t r : {8, 10, 28})
            for (std::size_t l1 = 0; l1 <= 3; ++l1)
                for (std::size_t l2 = 0; l2 <= 3; ++l2) {
                    const MinorModel m = fan_grid_minor_model(k, r, l1, l2);
                    const std::size_t l = std::max(l1, l2);
                    const MinorReport rep = validate_minor_model(m.host, m.pattern, m.branch_sets);
                    const bool ok = rep.ok && m.host_rows == k + 2 * l && m.host_cols == r + 2 * l &&
                                    m.pattern == build_fan_grid({k, r, l1, l2, false}).graph();
                    ++models;
                    if (!ok && failures++ == 0) first = rep.violation + " " + rep.witness;
                }
    return {failures == 0, std::to_string(models) + " models validated, " + std::to_string(failures) + " invalid" +
                               (failures ? "; first: " + first : "")};
}

Outcome corner_audit() {
    const Graph g = complete_graph(4);
    const HGraph h = build_h_graph(g, 4, loose_w(g), loose_w(g));
    const CornerAuditReport a = audit_corner_to_corner(h);
    std::ostringstream d;
    d << "K4, bare " << a.k << "x" << a.r << " grid: " << a.total.str() << " homs, " << a.corner_to_corner.str()
      << " c-c (identity " << a.identity.str() << ", skew " << a.skew_identity.str() << ", right pair non-fan "
      << a.right_pair_nonfan.str() << ", left pair non-fan " << a.left_pair_nonfan.str() << ", unexplained "
      << a.violations.str() << "), parity inconsistent " << a.parity_inconsistent.str();
    return {a.ok(), d.str()};
}

Outcome exact_end_to_end() {
    const Rational eps(1, 2);
    // group by (n, m) so the large per-parameter bounds are computed once
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 6; ++n)
        for (Graph& g : testing::all_graphs_up_to_iso(n)) graphs.push_back(std::move(g));
    std::stable_sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
        return std::pair(a.vertex_count(), a.edge_count()) < std::pair(b.vertex_count(), b.edge_count());
    });
    std::size_t runs = 0, wrong = 0, zero_cases = 0;
    std::string first;
    for (std::size_t k = 3; k <= 8; ++k) {
        std::uint64_t seed = 1000 * k;
        for (const Graph& g : graphs) {
            const auto oracle =
                simulated_oracle(synthetic_hom_counter(MnPolicy::random, seed++), ErrorModel::exact, Rational(0), 0);
            const BigCount truth = count_cliques_bruteforce(g, k);
            const ReductionLog log = reduce(g, k, eps, oracle);
            ++runs;
            zero_cases += truth.is_zero();
            if (log.estimate != truth && wrong++ == 0)
                first = "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + " k=" +
                        std::to_string(k) + ": " + log.estimate.str() + " vs " + truth.str();
        }
    }
    return {wrong == 0, std::to_string(runs) + " runs (" + std::to_string(graphs.size()) +
                            " graphs x k=3..8, epsilon 1/2, random M_n <= bound), " + std::to_string(zero_cases) +
                            " zero-count, " + std::to_string(wrong) + " wrong" + (wrong ? "; first: " + first : "")};
}

Outcome noisy_propagation() {
    std::ostringstream d;
    bool pass = true;
    for (const Rational& eps : {Rational(1, 20), Rational(1, 4)}) {
        std::mt19937_64 rng(eps == Rational(1, 20) ? 51 : 52);
        std::size_t trials = 0, conditioned = 0, outside = 0;
        while (trials < 100) {
            const Graph g = random_graph_with(3 + rng() % 4, rng);
            const std::size_t k = 3 + rng() % 2;
            const std::uint64_t seed = rng();
            const auto oracle = simulated_oracle(synthetic_hom_counter(MnPolicy::random, seed), ErrorModel::uniform,
                                                 Rational(1, 4), seed);
            const ReductionLog log = reduce(g, k, eps, oracle);
            ++trials;
            if (!log.all_calls_succeeded()) continue;
            ++conditioned;
            const Rational n(count_cliques_bruteforce(g, k).raw());
            const Rational diff = Rational(log.estimate.raw()) - n;
            if (abs(diff) > eps * n) ++outside;
        }
        pass = pass && outside == 0 && conditioned > 0;
        d << "eps=" << to_string(eps) << ": " << conditioned << "/" << trials << " successful runs, " << outside
          << " outside eps*N; ";
    }
    // unconditioned per-call success rate
    const ReductionInstance inst = make_instance(CompressedGraph(complete_graph(6)), 4);
    auto oracle = simulated_oracle(synthetic_hom_counter(MnPolicy::random, 9), ErrorModel::uniform, Rational(1, 4), 9);
    std::size_t ok = 0;
    for (int call = 0; call < 1000; ++call) ok += oracle(inst, Rational(1, 8)).success;
    constexpr double kMinSuccess = 1.0 - 0.25 - 0.05;
    const double rate = ok / 1000.0;
    pass = pass && rate >= kMinSuccess;
    d << "success rate " << rate << " over 1000 calls (min " << kMinSuccess << ")";
    return {pass, d.str()};
}

Outcome treewidth_sanity() {
    const std::size_t k5 = width(decompose_exact(complete_graph(5)));
    const std::size_t c5 = width(decompose_exact(cycle_graph(5)));
    const std::size_t g33 = width(decompose_exact(grid_graph(3, 3)));
    std::mt19937_64 rng(1111);
    std::size_t invalid = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph_with(1 + rng() % 40, rng);
        for (auto s : {EliminationStrategy::min_degree, EliminationStrategy::min_fill})
            invalid += !validate_decomposition(g, decompose_heuristic(g, s)).ok;
    }
    std::ostringstream d;
    d << "tw(K5)=" << k5 << " tw(C5)=" << c5 << " tw(3x3)=" << g33 << "; " << invalid
      << " invalid heuristic decompositions over 200 graphs x 2 strategies";
    return {k5 == 4 && c5 == 2 && g33 == 3 && invalid == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "engine agreement", 60, engine_agreement},
        {2, "identity homomorphisms = N k!", 300, identity_bijection},
        {3, "weight formulas", 120, weight_formulas},
        {4, "inequality chain", 26 * kSandwichInstanceLimit, sandwich_chain},
        {5, "adversarial recovery", 300, adversarial_recovery},
        {6, "blow-up identities", 120, blowup_identities},
        {7, "minor models", 60, minor_models},
        {8, "corner-to-corner case audit", 300, corner_audit},
        {9, "exact end-to-end", 300, exact_end_to_end},
        {10, "noisy error propagation", 300, noisy_propagation},
        {11, "treewidth sanity", 120, treewidth_sanity},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

    bool all = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(t0);
        const bool in_time = elapsed <= c.limit_seconds;
        const bool pass = o.pass && in_time;
        all = all && pass;
        char timing[96];
        std::snprintf(timing, sizeof timing, "%.1f s of %.0f s%s", elapsed, c.limit_seconds,
                      in_time ? "" : ", TOO SLOW");
        std::cout << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL") << " (" << timing
                  << ") " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
