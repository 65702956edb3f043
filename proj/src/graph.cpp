#include "wog/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wog {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(size_of(s));
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

bool canonical_less(VertexSet a, VertexSet b) {
    if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
    if (a == b) return false;
    // Equal sizes: the first position where the sorted lists differ holds
    // the smallest element of the symmetric difference.
    return has(a, lowest(a ^ b));
}

namespace {

int lookup(const std::vector<std::string>& names, std::string_view name) {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) return -1;
    return static_cast<int>(it - names.begin());
}

std::vector<std::string> names_in(const std::vector<std::string>& names, VertexSet s) {
    std::vector<std::string> out;
    for_each_bit(s, [&](int v) { out.push_back(names[v]); });
    return out;
}

}  // namespace

Graph::Graph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)), adj_(names_.size(), 0) {
    if (names_.size() > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(names_.size()) +
                            " vertices; at most 64 are supported");
    for (auto [u, v] : edges) {
        if (u == v) throw StructuralError("self-loop at " + names_[u]);
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

int Graph::index(std::string_view name) const {
    int i = lookup(names_, name);
    if (i < 0) throw LookupError("unknown vertex '" + std::string(name) + "'");
    return i;
}

std::optional<int> Graph::find(std::string_view name) const {
    int i = lookup(names_, name);
    if (i < 0) return std::nullopt;
    return i;
}

VertexSet Graph::set_of(const std::vector<std::string>& names) const {
    VertexSet s = 0;
    for (const auto& n : names) s |= bit(index(n));
    return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const { return names_in(names_, s); }

VertexSet Graph::nbrs_of_set(VertexSet s) const {
    VertexSet out = 0;
    for_each_bit(s, [&](int v) { out |= adj_[v]; });
    return out;
}

bool Graph::is_clique(VertexSet s) const {
    bool ok = true;
    for_each_bit(s, [&](int v) {
        if (!subset(s & ~bit(v), adj_[v])) ok = false;
    });
    return ok;
}

bool Graph::is_stable(VertexSet s) const {
    bool ok = true;
    for_each_bit(s, [&](int v) {
        if (adj_[v] & s) ok = false;
    });
    return ok;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u)
        for_each_bit(adj_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

int Graph::edge_count() const {
    int m = 0;
    for (auto a : adj_) m += size_of(a);
    return m / 2;
}

Graph Graph::induced(VertexSet s) const {
    std::vector<int> keep = members(s);
    std::vector<int> pos(size(), -1);
    std::vector<std::string> names;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        pos[keep[i]] = i;
        names.push_back(names_[keep[i]]);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : this->edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return Graph(std::move(names), edges);
}

Graph Graph::complement() const {
    std::vector<Edge> edges;
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v)
            if (!adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(names_, edges);
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> out;
    VertexSet left = all();
    while (left) {
        VertexSet comp = bit(lowest(left));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = nbrs_of_set(frontier) & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

Digraph::Digraph(std::vector<VertexSpec> vertices,
                 const std::vector<std::pair<std::string, std::string>>& arcs,
                 bool normalize_sources) {
    if (vertices.size() > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(vertices.size()) +
                            " vertices; at most 64 are supported");
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0 && vertices[i].id == vertices[i - 1].id)
            throw StructuralError("duplicate vertex '" + vertices[i].id + "'");
        if (vertices[i].weight < 1)
            throw StructuralError("vertex '" + vertices[i].id + "' has weight below 1");
        names_.push_back(vertices[i].id);
        weight_.push_back(vertices[i].weight);
    }
    out_.assign(names_.size(), 0);
    in_.assign(names_.size(), 0);
    for (const auto& [t, h] : arcs) {
        int u = index(t);
        int v = index(h);
        if (u == v) throw StructuralError("self-loop at '" + t + "'");
        if (has(out_[u], v)) throw StructuralError("repeated arc (" + t + "," + h + ")");
        if (has(out_[v], u))
            throw StructuralError("arcs (" + t + "," + h + ") and (" + h + "," + t +
                                  ") both present");
        out_[u] |= bit(v);
        in_[v] |= bit(u);
    }
    for (int v = 0; v < size(); ++v) {
        if (normalize_sources && in_[v] == 0) weight_[v] = 1;
        if (weight_[v] > 1) v_plus_ |= bit(v);
    }
}

void Digraph::check_index(int v) const {
    if (v < 0 || v >= size()) throw LookupError("vertex index out of range");
}

int Digraph::index(std::string_view name) const {
    int i = lookup(names_, name);
    if (i < 0) throw LookupError("unknown vertex '" + std::string(name) + "'");
    return i;
}

std::optional<int> Digraph::find(std::string_view name) const {
    int i = lookup(names_, name);
    if (i < 0) return std::nullopt;
    return i;
}

VertexSet Digraph::set_of(const std::vector<std::string>& names) const {
    VertexSet s = 0;
    for (const auto& n : names) s |= bit(index(n));
    return s;
}

std::vector<std::string> Digraph::names_of(VertexSet s) const { return names_in(names_, s); }

VertexSet Digraph::nbrs_of_set(VertexSet s) const {
    VertexSet out = 0;
    for_each_bit(s, [&](int v) { out |= nbrs(v); });
    return out;
}

VertexSet Digraph::out_nbrs_of_set(VertexSet s) const {
    VertexSet out = 0;
    for_each_bit(s, [&](int v) { out |= out_[v]; });
    return out;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < size(); ++u)
        for_each_bit(out_[u], [&](int v) { out.emplace_back(u, v); });
    return out;
}

std::vector<Digraph::VertexSpec> Digraph::vertex_specs() const {
    std::vector<VertexSpec> out;
    for (int v = 0; v < size(); ++v) out.push_back({names_[v], weight_[v]});
    return out;
}

std::vector<std::pair<std::string, std::string>> Digraph::named_arcs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : arcs()) out.emplace_back(names_[u], names_[v]);
    return out;
}

bool Digraph::is_normalized() const {
    for (int v = 0; v < size(); ++v)
        if (in_[v] == 0 && weight_[v] != 1) return false;
    return true;
}

Digraph Digraph::normalized() const { return Digraph(vertex_specs(), named_arcs(), true); }

Digraph Digraph::induced(VertexSet s) const {
    if (!subset(s, all())) throw LookupError("vertex set is not contained in the graph");
    std::vector<VertexSpec> vs;
    for_each_bit(s, [&](int v) { vs.push_back({names_[v], weight_[v]}); });
    std::vector<std::pair<std::string, std::string>> as;
    for (auto [u, v] : arcs())
        if (has(s, u) && has(s, v)) as.emplace_back(names_[u], names_[v]);
    return Digraph(std::move(vs), as, false);
}

Graph Digraph::underlying() const {
    std::vector<Edge> edges;
    for (auto [u, v] : arcs()) edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(names_, edges);
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.names_ == b.names_ && a.weight_ == b.weight_ && a.out_ == b.out_;
}

Digraph normalize(const Digraph& d) { return d.normalized(); }

std::optional<int> girth(const Graph& g) {
    int best = 0;
    const int n = g.size();
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for_each_bit(g.nbrs(u), [&](int v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (parent[u] != v) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

namespace {

void extend_induced(const Graph& g, int max_len, std::vector<int>& path, VertexSet on_path,
                    VertexSet interior_nbrs, std::vector<std::vector<int>>& out) {
    const int start = path.front();
    const int last = path.back();
    VertexSet cand = g.nbrs(last) & ~on_path & ~first_n(start + 1);
    for_each_bit(cand, [&](int v) {
        // No chord back to the interior of the path.
        if (has(interior_nbrs, v)) return;
        if (path.size() >= 2 && g.adjacent(v, start)) {
            if (path[1] < v) {
                path.push_back(v);
                out.push_back(path);
                path.pop_back();
            }
            return;
        }
        if (static_cast<int>(path.size()) + 1 >= max_len) return;
        VertexSet interior = path.size() >= 2 ? interior_nbrs | g.nbrs(last) : interior_nbrs;
        path.push_back(v);
        extend_induced(g, max_len, path, on_path | bit(v), interior, out);
        path.pop_back();
    });
}

bool find_cycle(const Graph& g, int start, int k, int last, int len, VertexSet used) {
    if (len == k) return g.adjacent(last, start);
    VertexSet cand = g.nbrs(last) & ~used & ~first_n(start + 1);
    for (VertexSet c = cand; c; c &= c - 1) {
        int v = lowest(c);
        if (find_cycle(g, start, k, v, len + 1, used | bit(v))) return true;
    }
    return false;
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const Graph& g, int max_len) {
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path{s};
        extend_induced(g, max_len, path, bit(s), 0, out);
    }
    return out;
}

bool has_cycle_of_length(const Graph& g, int k) {
    if (k < 3 || k > g.size()) return false;
    for (int s = 0; s < g.size(); ++s)
        if (find_cycle(g, s, k, s, 1, bit(s))) return true;
    return false;
}

}  // namespace wog
