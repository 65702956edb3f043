#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

VertexSet simplicial_vertices(const Graph& g);
// Distinct closed neighbourhoods of simplicial vertices, canonical order.
std::vector<VertexSet> simplexes(const Graph& g);
bool is_simplicial_graph(const Graph& g);
bool is_chordal(const Graph& g);

// Induced 5-cycles with no cycle edge joining two vertices of degree >= 3.
std::vector<std::vector<int>> basic_five_cycles(const Graph& g);

bool edge_has_property_p(const Graph& g, Edge e);
bool matching_has_property_p(const Graph& g, const std::vector<Edge>& m);
bool is_matching(const std::vector<Edge>& m);

struct SCQDecomposition {
    std::vector<VertexSet> simplexes;
    std::vector<std::vector<int>> cycles;
    std::vector<Edge> matching;
};

// Every simplex and every basic 5-cycle is a block; a property-(P) matching
// covers the remaining vertices.
std::optional<SCQDecomposition> scq_decompose(const Graph& g);
// Empty string when valid, otherwise the reason.
std::string check_scq(const Graph& g, const SCQDecomposition& dec);
int scq_tau(const Graph& g, const SCQDecomposition& dec);

struct StarCheck {
    bool holds = true;
    std::string clause;  // "star-1", "star-2" or "star-3" on failure
    Arc arc{-1, -1};     // the arc (a,b) whose clause failed
};

StarCheck star_property(const Digraph& d, const std::vector<int>& cycle);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
bool is_perfect(const Graph& g);

struct CliqueTauReduction {
    std::vector<VertexSet> cliques;
};

CliqueTauReduction tau_clique_reduction(const Graph& g);

struct SpecialGraphId {
    std::string name;
    std::map<std::string, std::string> bijection;  // vertex of G -> catalog vertex
};

struct CatalogEntry {
    std::string name;
    Graph graph;
    int vertices = 0;
    int edges = 0;
    std::optional<int> girth;
    bool well_covered = true;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name);
// Orientation tail < head by name, all weights 1.
Digraph catalog_digraph(std::string_view name);

// Calls f with phi (phi[v] = image in h of vertex v of g) for every
// isomorphism g -> h; f returns false to stop.
void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(const std::vector<int>&)>& f);
std::optional<SpecialGraphId> identify_special(const Graph& g);
std::optional<SpecialGraphId> identify_as(const Graph& g, std::string_view name);

}  // namespace wog
