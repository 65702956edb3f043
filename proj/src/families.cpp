#include "wog/families.hpp"

#include <algorithm>
#include <set>

#include "wog/covers.hpp"

namespace wog {

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out = 0;
    for (int v = 0; v < g.size(); ++v)
        if (g.is_clique(g.closed_nbrs(v))) out |= bit(v);
    return out;
}

std::vector<VertexSet> simplexes(const Graph& g) {
    std::set<VertexSet> seen;
    for_each_bit(simplicial_vertices(g), [&](int v) { seen.insert(g.closed_nbrs(v)); });
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool is_simplicial_graph(const Graph& g) {
    VertexSet simp = simplicial_vertices(g);
    for (int v = 0; v < g.size(); ++v)
        if (!has(simp, v) && !(g.nbrs(v) & simp)) return false;
    return true;
}

bool is_chordal(const Graph& g) {
    // Maximum cardinality search; chordal iff every vertex's earlier-numbered
    // neighbours form a clique.
    const int n = g.size();
    std::vector<int> weight(n, 0);
    VertexSet visited = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!has(visited, v) && (best < 0 || weight[v] > weight[best])) best = v;
        if (!g.is_clique(g.nbrs(best) & visited)) return false;
        visited |= bit(best);
        for_each_bit(g.nbrs(best) & ~visited, [&](int u) { ++weight[u]; });
    }
    return true;
}

std::vector<std::vector<int>> basic_five_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (auto& c : induced_cycles(g, 5)) {
        if (c.size() != 5) continue;
        bool basic = true;
        for (int i = 0; i < 5; ++i)
            if (g.degree(c[i]) >= 3 && g.degree(c[(i + 1) % 5]) >= 3) basic = false;
        if (basic) out.push_back(std::move(c));
    }
    return out;
}

bool edge_has_property_p(const Graph& g, Edge e) {
    auto [b, bp] = e;
    if (b < 0 || bp < 0 || b >= g.size() || bp >= g.size() || !g.adjacent(b, bp))
        throw PreconditionError("not an edge of the graph");
    VertexSet as = g.nbrs(b) & ~bit(bp);
    VertexSet aps = g.nbrs(bp) & ~bit(b);
    for (VertexSet s = as; s; s &= s - 1) {
        int a = lowest(s);
        if (aps & ~g.nbrs(a)) return false;
    }
    return true;
}

bool is_matching(const std::vector<Edge>& m) {
    VertexSet used = 0;
    for (auto [u, v] : m) {
        if (u == v || has(used, u) || has(used, v)) return false;
        used |= bit(u) | bit(v);
    }
    return true;
}

bool matching_has_property_p(const Graph& g, const std::vector<Edge>& m) {
    if (!is_matching(m)) throw PreconditionError("edge list is not a matching");
    return std::all_of(m.begin(), m.end(), [&](Edge e) { return edge_has_property_p(g, e); });
}

namespace {

VertexSet cycle_set(const std::vector<int>& c) {
    VertexSet s = 0;
    for (int v : c) s |= bit(v);
    return s;
}

// Perfect matching of `all` minus `covered` from the given edges.
bool match_rest(const std::vector<Edge>& edges, VertexSet all, VertexSet covered, std::vector<Edge>& chosen) {
    if (covered == all) return true;
    int v = lowest(all & ~covered);
    for (auto e : edges) {
        VertexSet s = bit(e.first) | bit(e.second);
        if (!has(s, v) || (s & covered) || !subset(s, all)) continue;
        chosen.push_back(e);
        if (match_rest(edges, all, covered | s, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SCQDecomposition> scq_decompose(const Graph& g) {
    SCQDecomposition dec;
    dec.simplexes = simplexes(g);
    dec.cycles = basic_five_cycles(g);
    VertexSet covered = 0;
    for (VertexSet s : dec.simplexes) {
        if (covered & s) return std::nullopt;
        covered |= s;
    }
    for (const auto& c : dec.cycles) {
        if (covered & cycle_set(c)) return std::nullopt;
        covered |= cycle_set(c);
    }
    std::vector<Edge> pedges;
    for (auto e : g.edges())
        if (edge_has_property_p(g, e)) pedges.push_back(e);
    if (!match_rest(pedges, g.all(), covered, dec.matching)) return std::nullopt;
    return dec;
}

std::string check_scq(const Graph& g, const SCQDecomposition& dec) {
    VertexSet covered = 0;
    auto take = [&](VertexSet s) {
        if (covered & s) return false;
        covered |= s;
        return true;
    };
    std::vector<VertexSet> simp = simplexes(g);
    for (VertexSet s : dec.simplexes) {
        if (std::find(simp.begin(), simp.end(), s) == simp.end()) return "block is not a simplex";
        if (!take(s)) return "blocks overlap";
    }
    if (dec.simplexes.size() != simp.size()) return "some simplex is not a block";
    std::vector<std::vector<int>> basic = basic_five_cycles(g);
    if (dec.cycles.size() != basic.size()) return "some basic 5-cycle is not a block";
    for (const auto& c : dec.cycles) {
        VertexSet s = cycle_set(c);
        bool found = c.size() == 5 && std::any_of(basic.begin(), basic.end(), [&](const std::vector<int>& b) {
            if (cycle_set(b) != s) return false;
            for (int i = 0; i < 5; ++i)
                if (!g.adjacent(c[i], c[(i + 1) % 5])) return false;
            return true;
        });
        if (!found) return "block is not a basic 5-cycle";
        if (!take(s)) return "blocks overlap";
    }
    for (auto e : dec.matching) {
        if (e.first < 0 || e.second < 0 || e.first >= g.size() || e.second >= g.size() ||
            !g.adjacent(e.first, e.second))
            return "matching block is not an edge";
        if (!edge_has_property_p(g, e)) return "matching edge lacks property (P)";
        if (!take(bit(e.first) | bit(e.second))) return "blocks overlap";
    }
    if (covered != g.all()) return "blocks do not cover every vertex";
    return "";
}

int scq_tau(const Graph& g, const SCQDecomposition& dec) {
    std::string why = check_scq(g, dec);
    if (!why.empty()) throw PreconditionError("invalid SCQ decomposition: " + why);
    int t = 0;
    for (VertexSet s : dec.simplexes) t += size_of(s) - 1;
    return t + 3 * static_cast<int>(dec.cycles.size()) + static_cast<int>(dec.matching.size());
}

StarCheck star_property(const Digraph& d, const std::vector<int>& c) {
    const Graph g = d.underlying();
    bool induced = c.size() == 5;
    if (induced) {
        for (int v : c)
            if (v < 0 || v >= d.size()) induced = false;
    }
    if (induced && size_of(cycle_set(c)) != 5) induced = false;
    for (int i = 0; induced && i < 5; ++i) {
        if (!g.adjacent(c[i], c[(i + 1) % 5])) induced = false;
        if (g.adjacent(c[i], c[(i + 2) % 5])) induced = false;
    }
    if (!induced) throw PreconditionError("not an induced 5-cycle");

    auto at = [&](int i) { return c[((i % 5) + 5) % 5]; };
    for (int i = 0; i < 5; ++i) {
        int a, b, ap, bp, cc;
        if (d.has_arc(at(i), at(i + 1))) {
            a = at(i), b = at(i + 1), ap = at(i - 1), bp = at(i + 2), cc = at(i + 3);
        } else {
            a = at(i + 1), b = at(i), ap = at(i + 2), bp = at(i - 1), cc = at(i - 2);
        }
        if (!d.heavy(a)) continue;
        const VertexSet vp = d.v_plus();
        if (!d.has_arc(ap, a) || d.heavy(ap)) return {false, "star-1", {a, b}};
        VertexSet in_a = d.in_nbrs(a);
        if (!subset(in_a, d.nbrs(cc)) || !subset(in_a & vp, d.in_nbrs(cc)))
            return {false, "star-2", {a, b}};
        if (!subset(d.nbrs(bp), d.nbrs(ap) | d.out_nbrs(a)) ||
            !subset(d.in_nbrs(bp) & vp, d.in_nbrs(ap)))
            return {false, "star-3", {a, b}};
    }
    return {};
}

int clique_number(const Graph& g) {
    std::function<int(VertexSet)> omega = [&](VertexSet s) -> int {
        if (!s) return 0;
        int v = lowest(s);
        return std::max(omega(s & ~bit(v)), 1 + omega(s & g.nbrs(v)));
    };
    return omega(g.all());
}

namespace {

constexpr int kPerfectLimit = 16;

void check_dp_limit(const Graph& g, const char* what) {
    if (g.size() > kPerfectLimit)
        throw CapacityError(std::string(what) + " is limited to " + std::to_string(kPerfectLimit) +
                            " vertices");
}

// chi[s] for every subset s, by removing a stable set through lowest(s).
std::vector<std::uint8_t> colour_table(const Graph& g) {
    const int n = g.size();
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::uint8_t> stable(full, 0);
    stable[0] = 1;
    for (std::size_t s = 1; s < full; ++s) {
        int v = lowest(s);
        VertexSet rest = s & (s - 1);
        stable[s] = stable[rest] && !(g.nbrs(v) & rest);
    }
    std::vector<std::uint8_t> chi(full, 0);
    for (std::size_t s = 1; s < full; ++s) {
        VertexSet low = bit(lowest(s));
        VertexSet rest = s & ~low;
        std::uint8_t best = 255;
        for (VertexSet sub = rest;; sub = (sub - 1) & rest) {
            VertexSet part = sub | low;
            if (stable[part]) best = std::min<std::uint8_t>(best, chi[s & ~part] + 1);
            if (sub == 0) break;
        }
        chi[s] = best;
    }
    return chi;
}

std::vector<std::uint8_t> clique_table(const Graph& g) {
    const std::size_t full = std::size_t{1} << g.size();
    std::vector<std::uint8_t> om(full, 0);
    for (std::size_t s = 1; s < full; ++s) {
        int v = lowest(s);
        VertexSet rest = s & (s - 1);
        om[s] = std::max<std::uint8_t>(om[rest], 1 + om[rest & g.nbrs(v)]);
    }
    return om;
}

}  // namespace

int chromatic_number(const Graph& g) {
    check_dp_limit(g, "chromatic number");
    return colour_table(g)[g.all()];
}

bool is_perfect(const Graph& g) {
    check_dp_limit(g, "perfectness test");
    std::vector<std::uint8_t> chi = colour_table(g);
    std::vector<std::uint8_t> om = clique_table(g);
    for (std::size_t s = 0; s < chi.size(); ++s)
        if (chi[s] != om[s]) return false;
    return true;
}

CliqueTauReduction tau_clique_reduction(const Graph& g) {
    if (!is_perfect(g)) throw PreconditionError("graph is not perfect");
    Graph comp = g.complement();
    std::vector<std::uint8_t> chi = colour_table(comp);
    CliqueTauReduction red;
    VertexSet s = g.all();
    while (s) {
        VertexSet low = bit(lowest(s));
        VertexSet rest = s & ~low;
        VertexSet pick = 0;
        for (VertexSet sub = rest;; sub = (sub - 1) & rest) {
            VertexSet part = sub | low;
            if (g.is_clique(part) && chi[s & ~part] + 1 == chi[s]) {
                pick = part;
                break;
            }
            if (sub == 0) break;
        }
        if (!pick) throw ConsistencyError("colouring reconstruction failed");
        red.cliques.push_back(pick);
        s &= ~pick;
    }
    int sum = 0;
    for (VertexSet h : red.cliques) sum += size_of(h) - 1;
    if (sum != tau(g) || static_cast<int>(red.cliques.size()) != beta(g))
        throw ConsistencyError("clique partition is not a tau-reduction");
    return red;
}

void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(const std::vector<int>&)>& f) {
    const int n = g.size();
    if (n != h.size() || g.edge_count() != h.edge_count()) return;
    {
        std::vector<int> dg, dh;
        for (int v = 0; v < n; ++v) {
            dg.push_back(g.degree(v));
            dh.push_back(h.degree(v));
        }
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        if (dg != dh) return;
    }
    std::vector<int> phi(n, -1);
    VertexSet used = 0;
    bool stop = false;
    std::function<void(int)> extend = [&](int v) {
        if (stop) return;
        if (v == n) {
            if (!f(phi)) stop = true;
            return;
        }
        for (int x = 0; x < n && !stop; ++x) {
            if (has(used, x) || g.degree(v) != h.degree(x)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != h.adjacent(phi[u], x)) ok = false;
            if (!ok) continue;
            phi[v] = x;
            used |= bit(x);
            extend(v + 1);
            used &= ~bit(x);
            phi[v] = -1;
        }
    };
    extend(0);
}

std::optional<SpecialGraphId> identify_as(const Graph& g, std::string_view name) {
    const CatalogEntry& e = catalog_entry(name);
    std::optional<SpecialGraphId> out;
    for_each_isomorphism(g, e.graph, [&](const std::vector<int>& phi) {
        SpecialGraphId id{e.name, {}};
        for (int v = 0; v < g.size(); ++v) id.bijection[g.name(v)] = e.graph.name(phi[v]);
        out = std::move(id);
        return false;
    });
    return out;
}

std::optional<SpecialGraphId> identify_special(const Graph& g) {
    for (const auto& e : catalog())
        if (auto id = identify_as(g, e.name)) return id;
    return std::nullopt;
}

}  // namespace wog
