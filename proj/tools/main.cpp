#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cli.hpp"
#include "homcsp/errors.hpp"
#include "homcsp/homcount.hpp"
#include "homcsp/io.hpp"

namespace homcsp::cli {

std::uint64_t effective_budget(const Globals& g) {
    if (g.budget > 0) return g.budget;
    if (const char* env = std::getenv("HOMCSP_BUDGET"); env && *env) {
        const std::string s(env);
        if (s.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("HOMCSP_BUDGET must be a positive integer, got \"" + s + "\"");
        return std::stoull(s);
    }
    return kDefaultHomBudget;
}

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

bool is_structure_file(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

RelationalStructure load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return structure_from_json(j);
}

void write_outputs(const std::string& prefix, const Graph& g, const nlohmann::json& sidecar) {
    write_edge_list_file(prefix + ".edges", g);
    std::ofstream meta(prefix + ".json");
    if (!meta) throw InvalidInput("cannot write " + prefix + ".json");
    meta << sidecar.dump(2) << '\n';
}

}  // namespace homcsp::cli

int main(int argc, char** argv) {
    using namespace homcsp;
    using namespace homcsp::cli;

    CLI::App app{"Homomorphism counting, gadget generation and clique-reduction experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--format", globals.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", globals.budget, "Enumeration budget (default: HOMCSP_BUDGET or 2e8)");

    Action action;
    add_gen(app, globals, action);
    add_count(app, globals, action);
    add_verify(app, globals, action);
    add_reduce(app, globals, action);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Result r = action();
        if (globals.format == "json") std::cout << r.report.dump(2) << '\n';
        else std::cout << r.text;
        return r.exit_code;
    } catch (const Refusal& e) {
        const nlohmann::json j = {{"status", "refused"}, {"reason", e.reason()}, {"detail", e.what()}};
        if (globals.format == "json") std::cout << j.dump(2) << '\n';
        else std::cerr << "refused (" << e.reason() << "): " << e.what() << '\n';
        return 2;
    }
}
