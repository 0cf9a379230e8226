#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <string>

#include <json.hpp>

#include "homcsp/graph.hpp"
#include "homcsp/structure.hpp"

namespace homcsp::cli {

struct Globals {
    std::string format = "text";
    std::uint64_t budget = 0;  // 0: take HOMCSP_BUDGET or the library default
};

struct Result {
    int exit_code = 0;
    nlohmann::json report;
    std::string text;
};

using Action = std::function<Result()>;

std::uint64_t effective_budget(const Globals& g);
Graph load_graph(const std::string& path);
bool is_structure_file(const std::string& path);
RelationalStructure load_structure(const std::string& path);
void write_outputs(const std::string& prefix, const Graph& g, const nlohmann::json& sidecar);

void add_gen(CLI::App& app, Globals& globals, Action& action);
void add_count(CLI::App& app, Globals& globals, Action& action);
void add_verify(CLI::App& app, Globals& globals, Action& action);
void add_reduce(CLI::App& app, Globals& globals, Action& action);

}  // namespace homcsp::cli
