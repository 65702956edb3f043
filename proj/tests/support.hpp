#pragma once

#include <string>
#include <vector>

#include "wog/deciders.hpp"
#include "wog/generator.hpp"
#include "wog/io.hpp"

namespace wogtest {

using namespace wog;

inline std::vector<std::string> names(std::initializer_list<const char*> xs) {
    return std::vector<std::string>(xs.begin(), xs.end());
}

inline Digraph make(std::vector<Digraph::VertexSpec> vs,
                    std::vector<std::pair<std::string, std::string>> arcs, bool normalize = true) {
    return Digraph(std::move(vs), arcs, normalize);
}

inline std::string label(int i) { return (i < 10 ? "n0" : "n") + std::to_string(i); }

// Vertices n00, n01, ... so index order equals construction order.
inline Graph graph_from(int n, const std::vector<Edge>& edges) {
    std::vector<std::string> ns;
    for (int i = 0; i < n; ++i) ns.push_back(label(i));
    return Graph(ns, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return graph_from(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return graph_from(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return graph_from(n, es);
}

// Orients edges as listed (first -> second) with the given weights.
inline Digraph orient(const Graph& g, const std::vector<Arc>& arcs, const std::vector<std::uint64_t>& w,
                      bool normalize = true) {
    std::vector<Digraph::VertexSpec> vs;
    for (int i = 0; i < g.size(); ++i) vs.push_back({g.name(i), w.empty() ? 1 : w[i]});
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [u, v] : arcs) named.emplace_back(g.name(u), g.name(v));
    return Digraph(vs, named, normalize);
}

// Orientation of g: edge i is reversed when bit i of mask is set.
inline Digraph orient_mask(const Graph& g, std::uint64_t mask, const std::vector<std::uint64_t>& w,
                           bool normalize = true) {
    std::vector<Arc> arcs;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        arcs.push_back((mask >> i) & 1U ? Arc{es[i].second, es[i].first} : es[i]);
    return orient(g, arcs, w, normalize);
}

inline std::string fixture_path(const std::string& file) { return std::string(WOG_FIXTURE_DIR) + "/" + file; }

inline GraphDocument fixture_doc(const std::string& file) { return parse_document(read_text(fixture_path(file))); }

inline Digraph fixture(const std::string& file) { return fixture_doc(file).graph; }

}  // namespace wogtest

using namespace wogtest;
