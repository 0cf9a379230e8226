#include "homcsp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "homcsp/errors.hpp"

namespace homcsp {

Graph read_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw InvalidInput("edge list must start with \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = -1, v = -1;
        if (!(in >> u >> v) || u < 0 || v < 0)
            throw InvalidInput("edge list truncated or malformed at edge " + std::to_string(i));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path);
    write_edge_list(out, g);
}

nlohmann::json structure_to_json(const RelationalStructure& a) {
    nlohmann::json sig = nlohmann::json::object();
    for (const auto& [name, ar] : a.signature().symbols())
        sig[name] = ar;
    nlohmann::json rels = nlohmann::json::object();
    for (const auto& [name, tuples] : a.relations()) {
        nlohmann::json list = nlohmann::json::array();
        for (const Tuple& t : tuples)
            list.push_back(t);
        rels[name] = std::move(list);
    }
    return {{"signature", sig}, {"universe", a.universe_size()}, {"relations", rels}};
}

RelationalStructure structure_from_json(const nlohmann::json& j) {
    try {
        std::map<std::string, std::size_t> sym;
        for (const auto& [name, ar] : j.at("signature").items())
            sym[name] = ar.get<std::size_t>();
        std::map<std::string, std::set<Tuple>> rels;
        if (j.contains("relations"))
            for (const auto& [name, list] : j.at("relations").items())
                for (const auto& t : list)
                    rels[name].insert(t.get<Tuple>());
        return RelationalStructure(Signature(std::move(sym)), j.at("universe").get<std::size_t>(),
                                   std::move(rels));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed structure JSON: ") + e.what());
    }
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << v << "\"];\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

}  // namespace homcsp
