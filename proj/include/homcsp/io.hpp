#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "homcsp/graph.hpp"
#include "homcsp/structure.hpp"

namespace homcsp {

/// "n m" header followed by m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

nlohmann::json structure_to_json(const RelationalStructure& a);
RelationalStructure structure_from_json(const nlohmann::json& j);

void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

}  // namespace homcsp
