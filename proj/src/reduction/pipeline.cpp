#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/pipeline.hpp"

namespace homcsp {

bool ReductionLog::all_calls_succeeded() const {
    for (const auto& c : calls)
        if (!c.success) return false;
    return true;
}

BigCount amplification_factor(std::size_t k, const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must satisfy 0 < epsilon < 1");
    const Rational bound = (1 + eps / 2) / eps;
    return smallest_root_above(bound, k);
}

std::pair<Graph, BigCount> amplify_cliques(const Graph& g, std::size_t k, const Rational& eps) {
    const BigCount s = amplification_factor(k, eps);
    return {blowup_Gs(g, s.to_u64()), s};
}

ReductionInstance make_instance(const CompressedGraph& g, std::size_t k) {
    ReductionInstance inst;
    inst.graph = g;
    inst.params = select_params(g.vertex_count(), g.edge_count(), k);
    const auto& p = inst.params;
    inst.fan_spec = FanGridSpec{p.k, p.r, p.l1, p.l2, false};
    inst.fan_grid_canonical = p.k >= 8 && p.r >= 8;
    inst.fan_grid_vertices = p.k * p.r + 4 * p.l1 + 8 * p.l2;
    inst.fan_grid_edges = p.k * (p.r - 1) + p.r * (p.k - 1) + 4 * p.l1 + 8 * p.l2;
    inst.h1_size = h1_census(p.n, p.m, p.k);
    inst.h_vertices = inst.h1_size + BigCount(4) * p.w1 + BigCount(8) * p.w2;
    return inst;
}

BigCount normalize_to_multiple_of_4(const CompressedGraph& g, std::size_t k, const Rational& eps,
                                    const CliqueOracle& oracle, ReductionLog* log) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must satisfy 0 < epsilon < 1");
    if (k == 0) throw InvalidInput("clique size must be positive");
    if (k % 4 == 0) {
        const OracleResponse r = oracle(g, k, eps);
        if (log) log->calls.push_back({"clique", k, eps, r.value, r.success});
        return r.value;
    }
    const BigCount t = smallest_root_above(Rational(3) / (2 * eps), k);
    const CompressedGraph blown = g.blowup(t);
    const BigCount s = ceil_rational(Rational(3 * blown.vertex_count().raw()) / eps);
    const CompressedGraph lifted = blown.add_universal(s);
    std::size_t slot = 0;
    if (log) {
        slot = log->lifts.size();
        log->lifts.push_back({k, eps, t, s, lifted.vertex_count(), BigCount(0), BigCount(0)});
    }
    const BigCount m = normalize_to_multiple_of_4(lifted, k + 1, eps / 3, oracle, log);
    const BigCount estimate = round_div(m / s, BigCount::pow(t, k));
    if (log) {
        log->lifts[slot].oracle_value = m;
        log->lifts[slot].estimate = estimate;
    }
    return estimate;
}

BigCount run_reduction(const CompressedGraph& g, std::size_t k, const Rational& eps, const HomOracle& oracle,
                       ReductionLog* log) {
    if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must satisfy 0 < epsilon < 1");
    if (k == 0 || k % 4 != 0)
        throw HypothesisViolation("run_reduction needs k to be a positive multiple of 4, got " + std::to_string(k));
    const BigCount s = amplification_factor(k, eps);
    CompressedGraph amplified = g.blowup(s);
    std::size_t pads = 0;
    while (amplified.edge_count().is_zero() ||
           BigCount(2) * amplified.vertex_count() + amplified.edge_count() <= BigCount(6)) {
        amplified = amplified.add_isolated_edge();
        ++pads;
    }
    const ReductionInstance inst = make_instance(amplified, k);
    const ReductionParams& p = inst.params;
    if (!p.hypotheses_hold())
        throw HypothesisViolation("canonical hypotheses fail after amplification (k=" + std::to_string(k) +
                                  ", 2n+m=" + p.two_n_plus_m().str() + ")");
    const Rational delta = eps / 2;
    const OracleResponse r = oracle(inst, delta);
    const BigCount q = recover_clique_count(r.value, p);
    const BigCount estimate = round_div(q, BigCount::pow(s, k));
    if (log) {
        log->amplification = s;
        log->isolated_edges = pads;
        if (pads) log->flags.push_back("padded with " + std::to_string(pads) + " isolated edge(s) to reach 2n+m > 6");
        if (!inst.fan_grid_canonical)
            log->flags.push_back("k=" + std::to_string(k) + " gives r=" + std::to_string(p.r) +
                                 "; fan positions of L(k, r, l1, l2) collide, so only the arithmetic is exercised");
        log->params.push_back(p);
        log->calls.push_back({"hom", k, delta, r.value, r.success});
        log->recovered = q;
    }
    return estimate;
}

ReductionLog reduce(const Graph& g, std::size_t k, const Rational& eps, const HomOracle& oracle) {
    ReductionLog log;
    const CliqueOracle inner = [&](const CompressedGraph& cg, std::size_t kk, const Rational& e) {
        const BigCount est = run_reduction(cg, kk, e, oracle, &log);
        return OracleResponse{est, log.all_calls_succeeded()};
    };
    log.estimate = normalize_to_multiple_of_4(CompressedGraph(g), k, eps, inner, &log);
    return log;
}

}  // namespace homcsp
