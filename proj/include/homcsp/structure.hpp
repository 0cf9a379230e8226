#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "homcsp/graph.hpp"

namespace homcsp {

using Tuple = std::vector<Vertex>;

/// Relation symbols and their arities, ordered by name.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::map<std::string, std::size_t> symbols);

    const std::map<std::string, std::size_t>& symbols() const { return symbols_; }
    std::size_t arity(const std::string& name) const;
    bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
    std::size_t size() const { return symbols_.size(); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::map<std::string, std::size_t> symbols_;
};

/// Finite relational structure with universe 0..universe_size-1.
class RelationalStructure {
public:
    RelationalStructure() = default;
    /// Every symbol of `signature` gets an entry; missing ones are empty.
    /// Throws InvalidInput on arity/range violations or unknown symbols.
    RelationalStructure(Signature signature, std::size_t universe_size,
                        std::map<std::string, std::set<Tuple>> relations);

    const Signature& signature() const { return signature_; }
    std::size_t universe_size() const { return universe_size_; }
    const std::map<std::string, std::set<Tuple>>& relations() const { return relations_; }
    const std::set<Tuple>& relation(const std::string& name) const;

    friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;

private:
    Signature signature_;
    std::size_t universe_size_ = 0;
    std::map<std::string, std::set<Tuple>> relations_;
};

/// Symbol used for graphs viewed as structures.
inline constexpr const char* kEdgeSymbol = "E";

/// |tau| + |A| + sum over symbols of |R^A| * ar(R).
std::size_t structure_size(const RelationalStructure& a);

/// True iff `map` sends every tuple of every relation of `a` into `b`.
/// Throws InvalidInput on signature mismatch or if `map` is not total.
bool is_homomorphism(const RelationalStructure& a, const RelationalStructure& b,
                     std::span<const Vertex> map);

/// Edge-preservation check on plain graphs.
bool is_graph_homomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

Graph gaifman_graph(const RelationalStructure& a);

/// One binary symbol holding both orientations of every edge.
RelationalStructure graph_as_structure(const Graph& g);

}  // namespace homcsp
