#include <algorithm>
#include <set>

#include "wog/covers.hpp"
#include "wog/families.hpp"

namespace wog {

namespace {

struct RawEntry {
    const char* name;
    std::vector<const char*> vertices;
    std::vector<std::pair<const char*, const char*>> edges;
    int n;
    int m;
    int girth;  // 0 for forests
};

const std::vector<RawEntry>& raw_catalog() {
    static const std::vector<RawEntry> raw = {
        {"K1", {"v"}, {}, 1, 0, 0},
        {"C7",
         {"c1", "c2", "c3", "c4", "c5", "c6", "c7"},
         {{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c4", "c5"}, {"c5", "c6"}, {"c6", "c7"}, {"c7", "c1"}},
         7, 7, 7},
        {"T10",
         {"v", "a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"},
         {{"v", "a1"}, {"a1", "b1"}, {"b1", "c1"}, {"v", "a2"}, {"a2", "b2"}, {"b2", "c2"},
          {"v", "a3"}, {"a3", "b3"}, {"b3", "c3"}, {"c1", "c2"}, {"c2", "c3"}, {"c1", "c3"}},
         10, 12, 3},
        {"P10",
         {"a1", "b1", "d1", "d2", "g1", "g2", "c1", "c2", "a2", "b2"},
         {{"a1", "b1"}, {"b1", "d2"}, {"d2", "d1"}, {"d1", "b2"}, {"b2", "a2"}, {"a1", "g1"},
          {"g1", "d1"}, {"g1", "c1"}, {"c1", "c2"}, {"c2", "g2"}, {"g2", "a2"}, {"d2", "g2"}},
         10, 12, 5},
        {"P13",
         {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "d1", "d2", "v"},
         {{"a4", "b4"}, {"b4", "c2"}, {"c2", "b3"}, {"b3", "a3"}, {"a3", "a4"}, {"a2", "a1"},
          {"a1", "b1"}, {"b1", "c1"}, {"c1", "b2"}, {"b2", "a2"}, {"d1", "b1"}, {"b3", "d1"},
          {"d2", "b2"}, {"d2", "b4"}, {"c1", "c2"}, {"d2", "v"}, {"v", "d1"}},
         13, 17, 5},
        {"P14",
         {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1", "b2", "b3", "b4", "b5", "b6", "b7"},
         {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a6"}, {"a6", "a7"},
          {"a7", "a1"}, {"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}, {"a4", "b4"}, {"a5", "b5"},
          {"a6", "b6"}, {"a7", "b7"}, {"b7", "b2"}, {"b2", "b4"}, {"b4", "b6"}, {"b6", "b1"},
          {"b1", "b3"}, {"b3", "b5"}, {"b5", "b7"}},
         14, 21, 5},
        {"Q13",
         {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "g1", "g2", "h", "hp", "v"},
         {{"a1", "a2"}, {"a2", "d2"}, {"d2", "g2"}, {"g2", "b2"}, {"b2", "c1"}, {"c1", "d1"},
          {"d1", "h"}, {"h", "v"}, {"v", "hp"}, {"hp", "g1"}, {"g1", "b1"}, {"b1", "c2"},
          {"c2", "d2"}, {"d2", "h"}, {"a1", "d1"}, {"d1", "g1"}, {"hp", "g2"}, {"c1", "c2"}},
         13, 18, 5},
    };
    return raw;
}

CatalogEntry load(const RawEntry& raw) {
    std::vector<std::string> names(raw.vertices.begin(), raw.vertices.end());
    std::sort(names.begin(), names.end());
    Graph skeleton(names, {});
    std::vector<Edge> edges;
    for (auto [u, v] : raw.edges) edges.emplace_back(skeleton.index(u), skeleton.index(v));
    CatalogEntry e{raw.name, Graph(names, edges), raw.n, raw.m, std::nullopt, true};
    if (raw.girth > 0) e.girth = raw.girth;
    const Graph& g = e.graph;
    if (g.size() != e.vertices || g.edge_count() != e.edges || girth(g) != e.girth ||
        !is_well_covered(g))
        throw ConsistencyError("catalog graph " + e.name + " does not match its metadata");
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& r : raw_catalog()) out.push_back(load(r));
        return out;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw LookupError("no catalog graph named '" + std::string(name) + "'");
}

Digraph catalog_digraph(std::string_view name) {
    const Graph& g = catalog_entry(name).graph;
    std::vector<Digraph::VertexSpec> vs;
    for (const auto& n : g.names()) vs.push_back({n, 1});
    std::vector<std::pair<std::string, std::string>> arcs;
    for (auto [u, v] : g.edges()) arcs.emplace_back(g.name(u), g.name(v));
    return Digraph(vs, arcs);
}

}  // namespace wog
