#include "wog/semiforest.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "wog/covers.hpp"

namespace wog {

VertexSet StarSemiForest::vertices() const {
    VertexSet s = 0;
    for (const auto& t : rots) s |= t.vertices;
    for (const auto& b : unicycles) s |= b.vertices;
    return s;
}

std::string describe(const Digraph& d, const Violation& v) {
    std::string out = v.clause;
    if (v.vertex >= 0 && v.vertex < d.size()) out += " at " + d.name(v.vertex);
    if (!v.detail.empty()) out += ": " + v.detail;
    return out;
}

namespace {

void check_arcs(const Digraph& d, const std::vector<Arc>& arcs) {
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= d.size() || v >= d.size())
            throw StructuralError("arc endpoint out of range");
        if (!d.has_arc(u, v))
            throw StructuralError("(" + d.name(u) + "," + d.name(v) + ") is not an arc of the graph");
    }
}

std::optional<Violation> check_endpoints(const std::vector<Arc>& arcs, VertexSet vertices) {
    std::set<Arc> seen;
    for (auto a : arcs) {
        if (!has(vertices, a.first)) return Violation{"arc-endpoints", a.first, "tail outside the vertex set"};
        if (!has(vertices, a.second)) return Violation{"arc-endpoints", a.second, "head outside the vertex set"};
        if (!seen.insert(a).second) return Violation{"arc-endpoints", a.first, "repeated arc"};
    }
    return std::nullopt;
}

std::vector<int> degrees(int n, const std::vector<Arc>& arcs) {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : arcs) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

VertexSet reach_forward(VertexSet start, const std::vector<Arc>& arcs) {
    VertexSet seen = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [u, v] : arcs)
            if (has(seen, u) && !has(seen, v)) {
                seen |= bit(v);
                grew = true;
            }
    }
    return seen;
}

VertexSet reach_undirected(VertexSet start, const std::vector<Arc>& arcs) {
    VertexSet seen = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [u, v] : arcs)
            if (has(seen, u) != has(seen, v)) {
                seen |= bit(u) | bit(v);
                grew = true;
            }
    }
    return seen;
}

}  // namespace

std::optional<Violation> validate_rot(const Digraph& d, const RootOrientedTree& t) {
    check_arcs(d, t.arcs);
    if (!subset(t.vertices, d.all())) throw StructuralError("tree vertex outside the graph");
    if (t.parent < 0 || !has(t.vertices, t.parent))
        return Violation{"parent", t.parent, "parent is not a vertex of the tree"};
    if (auto v = check_endpoints(t.arcs, t.vertices)) return v;
    if (static_cast<int>(t.arcs.size()) != size_of(t.vertices) - 1 ||
        reach_undirected(bit(t.parent), t.arcs) != t.vertices)
        return Violation{"acyclic", t.parent, "underlying graph is not a tree"};
    VertexSet reached = reach_forward(bit(t.parent), t.arcs);
    if (VertexSet miss = t.vertices & ~reached)
        return Violation{"oriented-path", lowest(miss),"no oriented path from the parent"};
    std::vector<int> deg = degrees(d.size(), t.arcs);
    bool singleton = t.vertices == bit(t.parent);
    for (VertexSet s = t.vertices & ~d.v_plus(); s; s &= s - 1) {
        int x = lowest(s);
        bool ok = (deg[x] == 1 && x != t.parent) || (singleton && x == t.parent);
        if (!ok) return Violation{"weight-one-leaf", x, "weight-1 vertex is not a leaf below the parent"};
    }
    return std::nullopt;
}

std::optional<Violation> validate_unicycle(const Digraph& d, const UnicycleSubgraph& b) {
    check_arcs(d, b.arcs);
    if (!subset(b.vertices, d.all())) throw StructuralError("unicycle vertex outside the graph");
    if (auto v = check_endpoints(b.arcs, b.vertices)) return v;
    const int len = static_cast<int>(b.cycle.size());
    if (len < 3) return Violation{"oriented-cycle", -1, "cycle has fewer than 3 vertices"};
    VertexSet cyc = 0;
    std::set<Arc> arcset(b.arcs.begin(), b.arcs.end());
    for (int i = 0; i < len; ++i) {
        int u = b.cycle[i];
        int v = b.cycle[(i + 1) % len];
        if (u < 0 || u >= d.size() || !has(b.vertices, u))
            return Violation{"oriented-cycle", u, "cycle vertex outside the subgraph"};
        if (has(cyc, u)) return Violation{"oriented-cycle", u, "cycle repeats a vertex"};
        cyc |= bit(u);
        if (!arcset.count({u, v})) return Violation{"oriented-cycle", u, "cycle arc missing"};
    }
    if (static_cast<int>(b.arcs.size()) != size_of(b.vertices) ||
        reach_undirected(cyc, b.arcs) != b.vertices)
        return Violation{"unique-cycle", b.cycle.front(), "subgraph does not have exactly one cycle"};
    VertexSet reached = reach_forward(cyc, b.arcs);
    if (VertexSet miss = b.vertices & ~reached)
        return Violation{"oriented-path", lowest(miss), "no oriented path from the cycle"};
    std::vector<int> deg = degrees(d.size(), b.arcs);
    for (VertexSet s = b.vertices & ~d.v_plus(); s; s &= s - 1) {
        int x = lowest(s);
        if (deg[x] != 1) return Violation{"weight-one-leaf", x, "weight-1 vertex does not have degree 1"};
    }
    return std::nullopt;
}

VertexSet h_tilde(const Digraph& d, const StarSemiForest& h) {
    std::vector<Arc> arcs;
    for (const auto& t : h.rots) arcs.insert(arcs.end(), t.arcs.begin(), t.arcs.end());
    for (const auto& b : h.unicycles) arcs.insert(arcs.end(), b.arcs.begin(), b.arcs.end());
    std::vector<int> deg = degrees(d.size(), arcs);
    VertexSet out = 0;
    for (int v = 0; v < d.size(); ++v)
        if (deg[v] >= 2) out |= bit(v);
    for (const auto& t : h.rots)
        if (deg[t.parent] == 1) out |= bit(t.parent);
    return out;
}

std::optional<Violation> validate_semiforest(const Digraph& d, const StarSemiForest& h) {
    VertexSet seen = 0;
    VertexSet parents = 0;
    for (const auto& t : h.rots) {
        if (auto v = validate_rot(d, t)) {
            v->clause = "tree/" + v->clause;
            return v;
        }
        if (seen & t.vertices) return Violation{"partition", lowest(seen & t.vertices), "components overlap"};
        seen |= t.vertices;
        parents |= bit(t.parent);
    }
    for (const auto& b : h.unicycles) {
        if (auto v = validate_unicycle(d, b)) {
            v->clause = "unicycle/" + v->clause;
            return v;
        }
        if (seen & b.vertices) return Violation{"partition", lowest(seen & b.vertices), "components overlap"};
        seen |= b.vertices;
    }
    VertexSet keys = 0;
    VertexSet w = 0;
    for (auto [p, wi] : h.witness) {
        if (p < 0 || p >= d.size() || !has(parents, p))
            return Violation{"witness-map", p, "witness assigned to a vertex that is not a parent"};
        if (wi < 0 || wi >= d.size()) throw StructuralError("witness vertex out of range");
        keys |= bit(p);
        w |= bit(wi);
    }
    if (VertexSet miss = parents & ~keys)
        return Violation{"witness-map", lowest(miss), "parent without a witness"};
    if (VertexSet bad = w & seen) return Violation{"witness-outside", lowest(bad), "witness lies in the forest"};
    for (auto [p, wi] : h.witness)
        if (!d.adjacent(p, wi)) return Violation{"witness-adjacent", p, "witness is not a neighbour of its parent"};
    if ((h.w1 | h.w2) != w || (h.w1 & h.w2))
        return Violation{"witness-partition", -1, "W1 and W2 do not partition the witness set"};
    for (VertexSet s = h.w1; s; s &= s - 1)
        if (d.nbrs(lowest(s)) & h.w1) return Violation{"w1-stable", lowest(s), "W1 is not stable"};
    if (VertexSet bad = h.w2 & ~d.v_plus()) return Violation{"w2-heavy", lowest(bad), "W2 vertex has weight 1"};
    for (auto [p, wi] : h.witness)
        if (has(h.w2, wi) && !d.has_arc(wi, p))
            return Violation{"w2-arc", wi, "W2 witness does not point at its parent"};
    VertexSet ht = h_tilde(d, h);
    if (VertexSet bad = d.out_nbrs_of_set(h.w2 | ht) & h.w1)
        return Violation{"w1-out-neighbours", lowest(bad), "W1 meets N+(W2 and the interior)"};

    if (!subset(ht, d.v_plus()))
        throw ConsistencyError("valid semi-forest has an interior vertex of weight 1");
    if (!subset(seen, d.nbrs_of_set(h.w1) | d.out_nbrs_of_set(h.w2 | ht)))
        throw ConsistencyError("valid semi-forest is not covered by N(W1) and N+(W2 and the interior)");
    return std::nullopt;
}

int semiforest_frontier_bound() {
    if (const char* env = std::getenv("WOG_SEMIFOREST_MAX_FRONTIER")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 30;
}

namespace {

struct FrontierSearch {
    const Digraph& d;
    VertexSet k;
    std::vector<int> cand;
    VertexSet w1 = 0;
    VertexSet blocked = 0;

    // x can still be served by some in-neighbour u of weight > 1 outside W1
    // whose out-neighbours avoid W1. Adding to W1 only removes options.
    bool served_by_arc(int x) const {
        for (VertexSet us = d.in_nbrs(x) & d.v_plus() & ~w1; us; us &= us - 1)
            if ((d.out_nbrs(lowest(us)) & w1) == 0) return true;
        return false;
    }

    bool feasible(VertexSet open) const {
        VertexSet reach = w1 | (open & ~blocked);
        for (VertexSet s = k; s; s &= s - 1) {
            int x = lowest(s);
            if (d.nbrs(x) & reach) continue;
            if (!served_by_arc(x)) return false;
        }
        return true;
    }

    bool run(std::size_t i) {
        VertexSet open = 0;
        for (std::size_t j = i; j < cand.size(); ++j) open |= bit(cand[j]);
        if (!feasible(open)) return false;
        if (i == cand.size()) return true;
        int v = cand[i];
        if (!has(blocked, v)) {
            VertexSet saved_b = blocked;
            w1 |= bit(v);
            blocked |= d.nbrs(v);
            if (run(i + 1)) return true;
            w1 &= ~bit(v);
            blocked = saved_b;
        }
        return run(i + 1);
    }
};

VertexSet grow(const Digraph& d, VertexSet seed, VertexSet room, std::vector<Arc>& arcs) {
    VertexSet comp = seed;
    std::deque<int> queue;
    for_each_bit(seed, [&](int v) { queue.push_back(v); });
    while (!queue.empty()) {
        int y = queue.front();
        queue.pop_front();
        if (!d.heavy(y)) continue;
        for_each_bit(d.out_nbrs(y) & room & ~comp, [&](int x) {
            arcs.emplace_back(y, x);
            comp |= bit(x);
            queue.push_back(x);
        });
    }
    return comp;
}

}  // namespace

StarSemiForest semiforest_from_strong_cover(const Digraph& d, VertexSet k, VertexSet c) {
    CoverAnalysis a = analyze_cover(d, c);
    if (!a.strong) throw PreconditionError("cover is not strong");
    if (!subset(k, c)) throw PreconditionError("K is not contained in the cover");

    StarSemiForest h;
    VertexSet outside = d.all() & ~c;
    for (VertexSet s = a.l1 & k; s; s &= s - 1) {
        int v = lowest(s);
        h.rots.push_back({v, bit(v), {}});
        int w = lowest(d.out_nbrs(v) & outside);
        h.witness[v] = w;
        h.w1 |= bit(w);
    }
    const VertexSet heavy_inner = (c & ~a.l1) & d.v_plus();
    VertexSet rest = k & ~a.l1;
    while (rest) {
        if (VertexSet l2 = a.l2 & rest) {
            int z = lowest(l2);
            RootOrientedTree t{z, 0, {}};
            t.vertices = grow(d, bit(z), rest, t.arcs);
            int w = lowest(d.in_nbrs(z) & outside);
            h.witness[z] = w;
            h.w1 |= bit(w);
            rest &= ~t.vertices;
            h.rots.push_back(std::move(t));
            continue;
        }
        std::vector<int> path{lowest(rest)};
        VertexSet on_path = bit(path.front());
        for (;;) {
            VertexSet back = d.in_nbrs(path.back()) & heavy_inner;
            if (!back) throw ConsistencyError("strong cover has an L3 vertex without a heavy in-neighbour");
            int u = lowest(back);
            if (has(on_path, u)) {
                auto it = std::find(path.begin(), path.end(), u);
                UnicycleSubgraph b;
                b.cycle.assign(path.rbegin(), std::make_reverse_iterator(it));
                VertexSet cyc = 0;
                for (std::size_t i = 0; i < b.cycle.size(); ++i) {
                    cyc |= bit(b.cycle[i]);
                    b.arcs.emplace_back(b.cycle[i], b.cycle[(i + 1) % b.cycle.size()]);
                }
                b.vertices = grow(d, cyc, rest, b.arcs);
                rest &= ~b.vertices;
                h.unicycles.push_back(std::move(b));
                break;
            }
            if (!has(k, u)) {
                int parent = path.back();
                RootOrientedTree t{parent, 0, {}};
                t.vertices = grow(d, bit(parent), rest, t.arcs);
                h.witness[parent] = u;
                h.w2 |= bit(u);
                rest &= ~t.vertices;
                h.rots.push_back(std::move(t));
                break;
            }
            if (!has(rest, u))
                throw ConsistencyError("backward walk reached an earlier component");
            path.push_back(u);
            on_path |= bit(u);
        }
    }
    if (auto v = validate_semiforest(d, h))
        throw ConsistencyError("constructed semi-forest is invalid: " + describe(d, *v));
    if (h.vertices() != k) throw ConsistencyError("constructed semi-forest does not span K");
    return h;
}

std::optional<StarSemiForest> exists_generating_semiforest(const Digraph& d, VertexSet k) {
    if (!subset(k, d.all())) throw LookupError("K is not contained in the graph");
    if (k == 0) return StarSemiForest{};
    VertexSet frontier = d.nbrs_of_set(k) & ~k;
    if (size_of(frontier) > semiforest_frontier_bound())
        throw CapacityError("|N(K) \\ K| = " + std::to_string(size_of(frontier)) +
                            " exceeds the semi-forest search bound of " +
                            std::to_string(semiforest_frontier_bound()));
    FrontierSearch search{d, k, members(frontier)};
    if (!search.run(0)) return std::nullopt;

    VertexSet w1 = search.w1;
    VertexSet heads = 0;
    for (VertexSet s = k & ~d.nbrs_of_set(w1); s; s &= s - 1) {
        int x = lowest(s);
        for (VertexSet us = d.in_nbrs(x) & d.v_plus() & ~w1; us; us &= us - 1)
            if ((d.out_nbrs(lowest(us)) & w1) == 0) {
                heads |= bit(lowest(us));
                break;
            }
    }
    VertexSet stable = w1;
    VertexSet block = d.nbrs_of_set(w1);
    for (int v = 0; v < d.size(); ++v)
        if (!has(stable, v) && !has(block, v)) {
            stable |= bit(v);
            block |= d.nbrs(v);
        }
    VertexSet cover = (d.all() & ~stable) | d.out_nbrs_of_set(heads);
    cover = strengthen(d, cover, heads);
    if (!subset(k, cover)) throw ConsistencyError("strengthened cover does not contain K");
    return semiforest_from_strong_cover(d, k, cover);
}

std::optional<VertexSet> strong_cover_superset_exists(const Digraph& d, VertexSet k) {
    if (!subset(k, d.all())) throw LookupError("K is not contained in the graph");
    check_oracle_bound(d);
    std::optional<VertexSet> best;
    for_each_vertex_cover(d, [&](VertexSet c) {
        if (subset(k, c) && classify_cover(d, c).strong && (!best || canonical_less(c, *best)))
            best = c;
        return true;
    });
    return best;
}

}  // namespace wog
