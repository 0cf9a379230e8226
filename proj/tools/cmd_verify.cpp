#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "homcsp/classify.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/homcount.hpp"
#include "homcsp/minor.hpp"
#include "homcsp/pipeline.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp::cli {

namespace {

struct VerifyOptions {
    std::string lemma;
    std::string graph;
    std::size_t k = 0, r = 0, l1 = 1, l2 = 1;
    std::string w1, w2;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t max_digits = 64;
};

Result verdict(const std::string& lemma, bool pass, nlohmann::json details, const std::string& body) {
    Result res;
    res.exit_code = pass ? 0 : 1;
    res.report = {{"command", "verify"}, {"lemma", lemma}, {"pass", pass}, {"details", std::move(details)}};
    res.text = body + (pass ? "PASS\n" : "FAIL\n");
    return res;
}

Graph need_graph(const VerifyOptions& o) {
    if (o.graph.empty()) throw InvalidInput("verify " + o.lemma + " needs --graph");
    return load_graph(o.graph);
}

Result verify_weight(const VerifyOptions& o, std::uint64_t budget) {
    std::mt19937_64 rng(o.seed);
    std::size_t maps = 0, mismatches = 0;
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
        const std::size_t k = 1 + rng() % 3, r = 1 + rng() % 3;
        const Graph h = random_graph(2 + rng() % 4, 0.6, rng);
        // up to two distinct fan sites with random leaf counts
        std::vector<FanSite> sites;
        const Cell a{static_cast<long>(1 + rng() % k), static_cast<long>(1 + rng() % r)};
        sites.push_back({a, rng() % 3});
        const Cell b{static_cast<long>(1 + rng() % k), static_cast<long>(1 + rng() % r)};
        if (!(b == a)) sites.push_back({b, rng() % 3});
        const FanGrid l(k, r, sites);
        const std::size_t grid = l.grid_vertex_count();
        for_each_hom(grid_graph(k, r), h, [&](std::span<const Vertex> phi) {
            Domains d(l.graph().vertex_count());
            for (Vertex v = 0; v < grid; ++v) d[v] = {phi[v]};
            for (Vertex v = static_cast<Vertex>(grid); v < d.size(); ++v)
                for (Vertex x = 0; x < h.vertex_count(); ++x) d[v].push_back(x);
            BigCount extensions(0);
            for_each_hom(l.graph(), h, [&](std::span<const Vertex>) {
                extensions += BigCount(1);
                return true;
            }, d, budget);
            ++maps;
            if (extension_weight(phi, l, h) != extensions) ++mismatches;
            return true;
        }, {}, budget);
    }
    const BigCount mock = identity_weight(custom_params(BigCount(4), BigCount(6), 3, BigCount(3), BigCount(2), 1, 1));
    const bool pass = mismatches == 0 && mock == BigCount(20736);
    std::ostringstream body;
    body << "extension weight vs enumerated extensions: " << maps << " maps, " << mismatches << " mismatches\n"
         << "W1=3, W2=2, l1=l2=1 identity weight: " << mock.str() << " (expected 20736)\n";
    return verdict(o.lemma, pass,
                   {{"seed", o.seed}, {"trials", o.trials}, {"maps", maps}, {"mismatches", mismatches},
                    {"mock_identity_weight", mock.str()}},
                   body.str());
}

Result verify_total_weight(const VerifyOptions& o) {
    const Graph g = need_graph(o);
    const std::size_t k = o.k ? o.k : 6;
    const BigCount w2 = o.w2.empty() ? BigCount(2 * (g.vertex_count() + g.edge_count()) + 1) : BigCount::parse(o.w2);
    const BigCount w1 = o.w1.empty() ? w2 + BigCount(1) : BigCount::parse(o.w1);
    const HGraph h = build_h_graph(g, k, w1, w2);
    const FanGrid l = build_fan_grid({k, h.r(), o.l1, o.l2, true});
    const DegreeAudit audit = audit_degrees(h);

    std::vector<BigCount> degree;
    for (Vertex x = 0; x < h.h1_size(); ++x) degree.push_back(h.degree(x));
    WeightedTarget target{h.h1(), degree, {}};
    for (std::size_t j = 0; j < l.site_count(); ++j)
        if (!l.fan_set(j).empty()) target.anchor_exponents[l.fan_vertex(j)] = l.fan_set(j).size();
    BigCount enumerated(0);
    for (bool skew : {false, true}) {
        TransferOptions opt;
        opt.domains = identity_domains(h, skew);
        enumerated += count_grid_homs_transfer(k, h.r(), target, opt);
    }
    const BigCount n = count_cliques_bruteforce(g, k);
    const ReductionParams p = custom_params(BigCount(g.vertex_count()), BigCount(g.edge_count()), k, w1, w2, o.l1, o.l2);
    const BigCount formula = mc_total(p, n);
    const bool pass = audit.ok && enumerated == formula;
    std::ostringstream body;
    body << "k=" << k << ", r=" << h.r() << ", W1=" << w1.str() << ", W2=" << w2.str() << ", l1=" << o.l1
         << ", l2=" << o.l2 << ", N=" << n.str() << "\n"
         << "degree audit: " << (audit.ok ? "ok" : "FAILED") << "\n"
         << "enumerated identity+skew weight: " << enumerated.str() << "\n"
         << "2 N W1^(4 l1) W2^(8 l2) k!:       " << formula.str() << "\n";
    return verdict(o.lemma, pass,
                   {{"k", k}, {"r", h.r()}, {"W1", w1.str()}, {"W2", w2.str()}, {"l1", o.l1}, {"l2", o.l2},
                    {"cliques", n.str()}, {"degree_audit", audit.ok}, {"enumerated", enumerated.str()},
                    {"formula", formula.str()}},
                   body.str());
}

ReductionParams canonical_for(const VerifyOptions& o) {
    const Graph g = need_graph(o);
    if (o.k == 0) throw InvalidInput("verify " + o.lemma + " needs --k");
    return select_params(BigCount(g.vertex_count()), BigCount(g.edge_count()), o.k);
}

Result verify_noncc(const VerifyOptions& o) {
    const ReductionParams p = canonical_for(o);
    if (!p.hypotheses_hold())
        throw HypothesisViolation("canonical hypotheses fail (k multiple of 4: " +
                                  std::string(p.k_multiple_of_4 ? "yes" : "no") +
                                  ", 2n+m = " + p.two_n_plus_m().str() + ")");
    const BigCount mn = cached_mn_upper_bound(p);
    const BigCount iw = cached_identity_weight(p);
    const bool pass = mn < iw;
    std::ostringstream body;
    body << "non-c-c bound: " << mn.decimal_digits() << " digits; W1^(4 l1) W2^(8 l2): " << iw.decimal_digits()
         << " digits\n";
    return verdict(o.lemma, pass,
                   {{"params", params_to_json(p, o.max_digits)}, {"bound", big_to_json(mn, o.max_digits)},
                    {"identity_weight", big_to_json(iw, o.max_digits)}, {"bound_digits", mn.decimal_digits()},
                    {"identity_weight_digits", iw.decimal_digits()}},
                   body.str());
}

Result verify_sandwich(const VerifyOptions& o) {
    const ReductionParams p = canonical_for(o);
    const SandwichTrace t = sandwich_holds(p);
    std::ostringstream body;
    for (const auto& s : t.steps)
        body << (s.holds ? "  ok   " : "  FAIL ") << s.name << "  [" << s.lhs.decimal_digits() << " vs "
             << s.rhs.decimal_digits() << " digits]\n";
    return verdict(o.lemma, t.holds,
                   {{"params", params_to_json(p, o.max_digits)}, {"trace", sandwich_to_json(t, o.max_digits)}},
                   body.str());
}

Result verify_minor(const VerifyOptions& o) {
    if (o.k == 0 || o.r == 0) throw InvalidInput("verify minor needs --k and --r");
    const MinorModel m = fan_grid_minor_model(o.k, o.r, o.l1, o.l2);
    const MinorReport rep = validate_minor_model(m.host, m.pattern, m.branch_sets);
    const bool dims = m.host_rows == o.k + 2 * std::max(o.l1, o.l2) && m.host_cols == o.r + 2 * std::max(o.l1, o.l2);
    std::ostringstream body;
    body << "L(" << o.k << "," << o.r << "," << o.l1 << "," << o.l2 << ") inside the " << m.host_rows << "x"
         << m.host_cols << " grid: " << (rep.ok ? "valid" : rep.violation + " at " + rep.witness) << "\n";
    return verdict(o.lemma, rep.ok && dims,
                   {{"host_rows", m.host_rows}, {"host_cols", m.host_cols}, {"valid", rep.ok},
                    {"violation", rep.violation}, {"witness", rep.witness}},
                   body.str());
}

Result verify_blowups(const VerifyOptions& o, std::uint64_t budget) {
    std::mt19937_64 rng(o.seed);
    std::size_t checks = 0, failures = 0;
    nlohmann::json first_failure;
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
        const Graph g = random_graph(1 + rng() % 7, 0.5, rng);
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t k = 2; k <= 4; ++k) {
                const BigCount n = count_cliques_bruteforce(g, k, budget);
                const BigCount n1 = count_cliques_bruteforce(g, k + 1, budget);
                const BigCount sk = BigCount::pow(BigCount(s), k);
                const bool a = count_cliques_bruteforce(blowup_Gs(g, s), k, budget) == sk * n;
                const bool b = count_cliques_bruteforce(add_universal_vertices(g, s), k + 1, budget) ==
                               BigCount(s) * n + n1;
                const bool c = count_cliques_bruteforce(blowup_Gk(g, s), k, budget) == sk * n;
                checks += 3;
                const std::size_t bad = !a + !b + !c;
                if (bad && failures == 0) first_failure = {{"trial", trial}, {"s", s}, {"k", k}};
                failures += bad;
            }
    }
    std::ostringstream body;
    body << checks << " identities checked over " << o.trials << " graphs (seed " << o.seed << "), " << failures
         << " failures\n";
    nlohmann::json details = {{"seed", o.seed}, {"trials", o.trials}, {"checks", checks}, {"failures", failures}};
    if (failures) details["first_failure"] = first_failure;
    return verdict(o.lemma, failures == 0, details, body.str());
}

Result verify_parity(const VerifyOptions& o, std::uint64_t budget) {
    const Graph g = need_graph(o);
    const std::size_t k = o.k ? o.k : 3;
    const BigCount w(2 * (g.vertex_count() + g.edge_count()) + 1);
    const HGraph h = build_h_graph(g, k, w, w);
    const Graph grid = grid_graph(k, h.r());
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < grid.vertex_count(); ++u)
        for (Vertex v = 0; v < grid.vertex_count(); ++v) pairs.emplace_back(u, v);
    std::vector<Vertex> all(h.h1_size());
    std::iota(all.begin(), all.end(), Vertex{0});
    std::mt19937_64 rng(o.seed);
    std::size_t sampled = 0, broken = 0;
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
        Domains d(grid.vertex_count(), all);
        d[0] = {static_cast<Vertex>(rng() % h.h1_size())};
        const std::uint64_t skip = rng() % 1000;
        std::uint64_t seen = 0;
        std::vector<Vertex> chosen;
        for_each_hom(grid, h.h1(), [&](std::span<const Vertex> phi) {
            chosen.assign(phi.begin(), phi.end());
            return seen++ < skip;
        }, d, budget);
        if (chosen.empty()) continue;
        ++sampled;
        if (!verify_parity_preservation(chosen, grid, h.h1(), pairs)) ++broken;
    }
    std::ostringstream body;
    body << sampled << " sampled homomorphisms from the " << k << "x" << h.r() << " grid into H1, " << broken
         << " break parity\n";
    return verdict(o.lemma, broken == 0 && sampled > 0,
                   {{"seed", o.seed}, {"sampled", sampled}, {"broken", broken}, {"k", k}, {"r", h.r()}}, body.str());
}

Result verify_classification(const VerifyOptions& o) {
    const Graph g = need_graph(o);
    const std::size_t k = o.k ? o.k : 4;
    const BigCount w(2 * (g.vertex_count() + g.edge_count()) + 1);
    const HGraph h = build_h_graph(g, k, w, w);
    const CornerAuditReport a = audit_corner_to_corner(h);
    std::ostringstream body;
    body << "bare " << a.k << "x" << a.r << " grid into H1: " << a.total.str() << " homomorphisms, "
         << a.corner_to_corner.str() << " corner-to-corner\n"
         << "  identity " << a.identity.str() << ", skew identity " << a.skew_identity.str() << "\n"
         << "  right pair on non-fan labels " << a.right_pair_nonfan.str() << ", left pair on non-fan labels "
         << a.left_pair_nonfan.str() << "\n"
         << "  unexplained " << a.violations.str() << ", parity inconsistent " << a.parity_inconsistent.str() << "\n";
    return verdict(o.lemma, a.ok(),
                   {{"k", a.k}, {"r", a.r}, {"total", a.total.str()}, {"corner_to_corner", a.corner_to_corner.str()},
                    {"identity", a.identity.str()}, {"skew_identity", a.skew_identity.str()},
                    {"right_pair_nonfan", a.right_pair_nonfan.str()}, {"left_pair_nonfan", a.left_pair_nonfan.str()},
                    {"violations", a.violations.str()}, {"parity_inconsistent", a.parity_inconsistent.str()}},
                   body.str());
}

}  // namespace

void add_verify(CLI::App& app, Globals& globals, Action& action) {
    auto o = std::make_shared<VerifyOptions>();
    auto* cmd = app.add_subcommand("verify", "Check a construction or bound and report pass/fail");
    cmd->add_option("lemma", o->lemma, "What to check")
        ->required()
        ->check(CLI::IsMember({"weight", "total-weight", "noncc-bound", "sandwich", "minor", "blowups", "parity",
                               "classification"}));
    cmd->add_option("--graph", o->graph, "Input edge list");
    cmd->add_option("--k", o->k, "Clique size / grid rows");
    cmd->add_option("--r", o->r, "Grid columns (minor)");
    cmd->add_option("--l1", o->l1, "Leaves per corner fan vertex")->capture_default_str();
    cmd->add_option("--l2", o->l2, "Leaves per other fan vertex")->capture_default_str();
    cmd->add_option("--w1", o->w1, "Corner degree W1 (total-weight)");
    cmd->add_option("--w2", o->w2, "Other fan degree W2 (total-weight)");
    cmd->add_option("--trials", o->trials, "Random trials")->capture_default_str();
    cmd->add_option("--seed", o->seed, "Random seed")->capture_default_str();
    cmd->add_option("--max-digits", o->max_digits, "Abbreviate integers longer than this in JSON (0: never)")
        ->capture_default_str();
    cmd->callback([o, &globals, &action] {
        action = [o, &globals]() -> Result {
            const std::uint64_t budget = effective_budget(globals);
            const std::string& l = o->lemma;
            if (l == "weight") return verify_weight(*o, budget);
            if (l == "total-weight") return verify_total_weight(*o);
            if (l == "noncc-bound") return verify_noncc(*o);
            if (l == "sandwich") return verify_sandwich(*o);
            if (l == "minor") return verify_minor(*o);
            if (l == "blowups") return verify_blowups(*o, budget);
            if (l == "parity") return verify_parity(*o, budget);
            return verify_classification(*o);
        };
    });
}

}  // namespace homcsp::cli
