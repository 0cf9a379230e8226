#include <memory>
#include <sstream>

#include "cli.hpp"
#include "homcsp/cliques.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/fan_grid.hpp"
#include "homcsp/hgraph.hpp"
#include "homcsp/minor.hpp"

namespace homcsp::cli {

namespace {

struct GenOptions {
    std::string kind;
    std::size_t k = 0, r = 0, l1 = 0, l2 = 0;
    bool relaxed = false;
    std::string graph;
    std::size_t s = 0, t = 0;
    std::string w1, w2;
    std::string padding = "nested";
    std::string out;
};

Graph need_graph(const GenOptions& o) {
    if (o.graph.empty()) throw InvalidInput("gen " + o.kind + " needs --graph");
    return load_graph(o.graph);
}

std::size_t need(std::size_t value, const char* flag, const std::string& kind) {
    if (value == 0) throw InvalidInput(std::string("gen ") + kind + " needs a positive " + flag);
    return value;
}

Result finish(const GenOptions& o, const Graph& g, nlohmann::json meta, const std::string& headline) {
    meta["vertices"] = g.vertex_count();
    meta["edges"] = g.edge_count();
    if (!o.out.empty()) write_outputs(o.out, g, meta);
    Result res;
    res.report = {{"command", "gen"}, {"kind", o.kind}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (!o.out.empty()) res.report["files"] = {o.out + ".edges", o.out + ".json"};
    std::ostringstream text;
    text << headline << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (const auto& [key, value] : meta.items()) {
        if (key == "vertices" || key == "edges" || key == "labels" || key == "branch_sets" || key == "k_classes")
            continue;
        res.report[key] = value;
    }
    if (!o.out.empty()) text << "wrote " << o.out << ".edges and " << o.out << ".json\n";
    res.text = text.str();
    return res;
}

Result gen_hgraph(const GenOptions& o) {
    const Graph g = need_graph(o);
    const std::size_t k = need(o.k, "--k", o.kind);
    const BigCount fallback(2 * (g.vertex_count() + g.edge_count()) + 1);
    const BigCount w2 = o.w2.empty() ? fallback : BigCount::parse(o.w2);
    const BigCount w1 = o.w1.empty() ? w2 : BigCount::parse(o.w1);
    const PaddingPolicy policy = o.padding == "rotating" ? PaddingPolicy::rotating : PaddingPolicy::nested_prefix;
    const HGraph h = build_h_graph(g, k, w1, w2, policy);
    const DegreeAudit audit = audit_degrees(h);

    Result res;
    res.report = {{"command", "gen"},
                  {"kind", o.kind},
                  {"k", k},
                  {"r", h.r()},
                  {"W1", w1.str()},
                  {"W2", w2.str()},
                  {"h1_size", h.h1_size()},
                  {"h1_edges", h.h1().edge_count()},
                  {"h1_census", h1_census(BigCount(g.vertex_count()), BigCount(g.edge_count()), k).str()},
                  {"degree_audit", audit.ok}};
    const BigCount total = BigCount(h.h1_size()) + BigCount(4) * w1 + BigCount(8) * w2;
    res.report["vertices"] = total.str();
    std::ostringstream text;
    text << "H(G, k=" << k << ", W1=" << w1.str() << ", W2=" << w2.str() << "): |H1| = " << h.h1_size() << " ("
         << h.h1().edge_count() << " edges) plus K-classes of sizes 4x" << w1.str() << " and 8x" << w2.str() << "\n";
    text << "degree audit: " << (audit.ok ? "ok" : "FAILED") << "\n";
    if (!o.out.empty()) {
        const Graph full = h.materialize();
        nlohmann::json meta = h.metadata();
        meta["vertices"] = full.vertex_count();
        meta["edges"] = full.edge_count();
        write_outputs(o.out, full, meta);
        res.report["files"] = {o.out + ".edges", o.out + ".json"};
        text << "wrote " << o.out << ".edges and " << o.out << ".json\n";
    }
    res.text = text.str();
    res.exit_code = audit.ok ? 0 : 1;
    return res;
}

Result run_gen(const GenOptions& o) {
    if (o.kind == "fan-grid") {
        const FanGridSpec spec{need(o.k, "--k", o.kind), need(o.r, "--r", o.kind), o.l1, o.l2, o.relaxed};
        const FanGrid l = build_fan_grid(spec);
        nlohmann::json meta = {{"kind", "fan-grid"}, {"k", spec.k}, {"r", spec.r}, {"l1", spec.l1},
                               {"l2", spec.l2}, {"relaxed", spec.relaxed}};
        nlohmann::json fans = nlohmann::json::array();
        for (std::size_t j = 0; j < l.site_count(); ++j)
            fans.push_back({{"u", j + 1},
                            {"cell", {l.sites()[j].position.i, l.sites()[j].position.p}},
                            {"vertex", l.fan_vertex(j)},
                            {"leaves", l.fan_set(j)}});
        meta["fans"] = fans;
        std::ostringstream head;
        head << "L(" << spec.k << "," << spec.r << "," << spec.l1 << "," << spec.l2 << ")";
        return finish(o, l.graph(), meta, head.str());
    }
    if (o.kind == "grid") {
        const Graph g = grid_graph(need(o.k, "--k", o.kind), need(o.r, "--r", o.kind));
        return finish(o, g, {{"kind", "grid"}, {"k", o.k}, {"r", o.r}},
                      std::to_string(o.k) + "x" + std::to_string(o.r) + " grid");
    }
    if (o.kind == "hgraph") return gen_hgraph(o);
    if (o.kind == "blowup-gs") {
        const std::size_t s = need(o.s, "--s", o.kind);
        return finish(o, blowup_Gs(need_graph(o), s), {{"kind", o.kind}, {"s", s}}, "G_s with s=" + std::to_string(s));
    }
    if (o.kind == "blowup-gk") {
        const std::size_t t = need(o.t, "--t", o.kind);
        return finish(o, blowup_Gk(need_graph(o), t), {{"kind", o.kind}, {"t", t}},
                      "G^(t) with t=" + std::to_string(t));
    }
    if (o.kind == "universal") {
        const std::size_t s = need(o.s, "--s", o.kind);
        return finish(o, add_universal_vertices(need_graph(o), s), {{"kind", o.kind}, {"s", s}},
                      "G^{+s} with s=" + std::to_string(s));
    }
    // minor-model
    const MinorModel m = fan_grid_minor_model(need(o.k, "--k", o.kind), need(o.r, "--r", o.kind), o.l1, o.l2);
    const MinorReport rep = validate_minor_model(m.host, m.pattern, m.branch_sets);
    nlohmann::json meta = {{"kind", o.kind}, {"k", o.k}, {"r", o.r}, {"l1", o.l1}, {"l2", o.l2},
                           {"host_rows", m.host_rows}, {"host_cols", m.host_cols},
                           {"pattern_vertices", m.pattern.vertex_count()}, {"valid", rep.ok},
                           {"branch_sets", m.branch_sets}};
    Result res = finish(o, m.host, meta,
                        "minor model of L(" + std::to_string(o.k) + "," + std::to_string(o.r) + "," +
                            std::to_string(o.l1) + "," + std::to_string(o.l2) + ") in the " +
                            std::to_string(m.host_rows) + "x" + std::to_string(m.host_cols) + " grid");
    res.text += std::string("validation: ") + (rep.ok ? "ok" : rep.violation + " at " + rep.witness) + "\n";
    res.exit_code = rep.ok ? 0 : 1;
    return res;
}

}  // namespace

void add_gen(CLI::App& app, Globals&, Action& action) {
    auto o = std::make_shared<GenOptions>();
    auto* cmd = app.add_subcommand("gen", "Generate gadgets and blow-ups");
    cmd->add_option("kind", o->kind, "What to generate")
        ->required()
        ->check(CLI::IsMember({"fan-grid", "hgraph", "blowup-gs", "blowup-gk", "universal", "grid", "minor-model"}));
    cmd->add_option("--k", o->k, "Rows / clique size");
    cmd->add_option("--r", o->r, "Columns");
    cmd->add_option("--l1", o->l1, "Leaves per corner fan vertex");
    cmd->add_option("--l2", o->l2, "Leaves per other fan vertex");
    cmd->add_flag("--relaxed", o->relaxed, "Allow k or r below 8 when fan positions stay distinct");
    cmd->add_option("--graph", o->graph, "Input edge list");
    cmd->add_option("--s", o->s, "Blow-up factor or number of universal vertices");
    cmd->add_option("--t", o->t, "Blow-up factor for G^(t)");
    cmd->add_option("--w1", o->w1, "Corner degree W1 (hgraph)");
    cmd->add_option("--w2", o->w2, "Other fan degree W2 (hgraph, default 2(n+m)+1)");
    cmd->add_option("--padding", o->padding, "K-class attachment")->check(CLI::IsMember({"nested", "rotating"}));
    cmd->add_option("--out", o->out, "Write <out>.edges and <out>.json");
    cmd->callback([o, &action] { action = [o] { return run_gen(*o); }; });
}

}  // namespace homcsp::cli
