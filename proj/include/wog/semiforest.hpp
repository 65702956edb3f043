#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

struct RootOrientedTree {
    int parent = -1;
    VertexSet vertices = 0;
    std::vector<Arc> arcs;
};

struct UnicycleSubgraph {
    std::vector<int> cycle;  // oriented: cycle[i] -> cycle[i+1], last -> first
    VertexSet vertices = 0;
    std::vector<Arc> arcs;
};

struct StarSemiForest {
    std::vector<RootOrientedTree> rots;
    std::vector<UnicycleSubgraph> unicycles;
    std::map<int, int> witness;  // parent -> w
    VertexSet w1 = 0;
    VertexSet w2 = 0;

    VertexSet vertices() const;
};

struct Violation {
    std::string clause;
    int vertex = -1;
    std::string detail;
};

// nullopt means the structure is valid. Arcs that are not arcs of d throw
// StructuralError.
std::optional<Violation> validate_rot(const Digraph& d, const RootOrientedTree& t);
std::optional<Violation> validate_unicycle(const Digraph& d, const UnicycleSubgraph& b);
std::optional<Violation> validate_semiforest(const Digraph& d, const StarSemiForest& h);

VertexSet h_tilde(const Digraph& d, const StarSemiForest& h);

// Largest frontier |N(K) \ K| the existence search accepts.
int semiforest_frontier_bound();

std::optional<StarSemiForest> exists_generating_semiforest(const Digraph& d, VertexSet k);
std::optional<VertexSet> strong_cover_superset_exists(const Digraph& d, VertexSet k);
StarSemiForest semiforest_from_strong_cover(const Digraph& d, VertexSet k, VertexSet c);

std::string describe(const Digraph& d, const Violation& v);

}  // namespace wog
