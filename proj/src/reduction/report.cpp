#include <string>

#include "homcsp/pipeline.hpp"

namespace homcsp {

nlohmann::json big_to_json(const BigCount& x, std::size_t max_digits) {
    std::string s = x.str();
    if (max_digits == 0 || s.size() <= max_digits) return s;
    const std::size_t keep = std::max<std::size_t>(1, max_digits / 2);
    return s.substr(0, keep) + "..." + s.substr(s.size() - keep) + " [" + std::to_string(s.size()) + " digits]";
}

nlohmann::json params_to_json(const ReductionParams& p, std::size_t max_digits) {
    nlohmann::json j;
    j["n"] = big_to_json(p.n, max_digits);
    j["m"] = big_to_json(p.m, max_digits);
    j["k"] = p.k;
    j["r"] = p.r;
    j["W1"] = big_to_json(p.w1, max_digits);
    j["W2"] = big_to_json(p.w2, max_digits);
    j["l1"] = p.l1;
    j["l2"] = p.l2;
    j["T"] = p.t ? nlohmann::json(*p.t) : nlohmann::json(nullptr);
    j["canonical"] = p.canonical;
    j["hypotheses"] = {{"k_multiple_of_4", p.k_multiple_of_4}, {"two_n_plus_m_gt_6", p.size_ok}};
    return j;
}

nlohmann::json sandwich_to_json(const SandwichTrace& t, std::size_t max_digits) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"step", s.name},
                         {"relation", s.relation},
                         {"lhs", big_to_json(s.lhs, max_digits)},
                         {"rhs", big_to_json(s.rhs, max_digits)},
                         {"lhs_digits", s.lhs.decimal_digits()},
                         {"rhs_digits", s.rhs.decimal_digits()},
                         {"holds", s.holds}});
    }
    return {{"holds", t.holds}, {"steps", steps}};
}

nlohmann::json log_to_json(const ReductionLog& log, std::size_t max_digits) {
    nlohmann::json lifts = nlohmann::json::array();
    for (const auto& l : log.lifts) {
        lifts.push_back({{"k", l.k},
                         {"epsilon", to_string(l.epsilon)},
                         {"t", big_to_json(l.t, max_digits)},
                         {"s", big_to_json(l.s, max_digits)},
                         {"vertices", big_to_json(l.vertices, max_digits)},
                         {"oracle_value", big_to_json(l.oracle_value, max_digits)},
                         {"estimate", big_to_json(l.estimate, max_digits)}});
    }
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : log.params) params.push_back(params_to_json(p, max_digits));
    nlohmann::json calls = nlohmann::json::array();
    for (const auto& c : log.calls) {
        calls.push_back({{"kind", c.kind},
                         {"k", c.k},
                         {"tolerance", to_string(c.tolerance)},
                         {"response", big_to_json(c.response, max_digits)},
                         {"success", c.success}});
    }
    return {{"lifts", lifts},
            {"amplification_s", big_to_json(log.amplification, max_digits)},
            {"isolated_edges_added", log.isolated_edges},
            {"flags", log.flags},
            {"params", params},
            {"oracle_calls", calls},
            {"recovered_before_rescaling", big_to_json(log.recovered, max_digits)},
            {"all_calls_succeeded", log.all_calls_succeeded()},
            {"estimate", big_to_json(log.estimate, max_digits)}};
}

}  // namespace homcsp
