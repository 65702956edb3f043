#include "wog/covers.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace wog {

const char* to_string(Status s) {
    switch (s) {
        case Status::unmixed: return "unmixed";
        case Status::mixed: return "mixed";
        case Status::not_applicable: return "not-applicable";
        case Status::unknown: return "unknown";
    }
    return "unknown";
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
    VertexSet outside = g.all() & ~c;
    for (VertexSet s = outside; s; s &= s - 1)
        if (g.nbrs(lowest(s)) & outside) return false;
    return true;
}

bool is_vertex_cover(const Digraph& d, VertexSet c) {
    VertexSet outside = d.all() & ~c;
    for (VertexSet s = outside; s; s &= s - 1)
        if (d.nbrs(lowest(s)) & outside) return false;
    return true;
}

namespace {

bool stable_rec(const Graph& g, int i, VertexSet chosen, VertexSet blocked,
                const std::function<bool(VertexSet)>& f) {
    if (i == g.size()) return f(chosen);
    if (!stable_rec(g, i + 1, chosen, blocked, f)) return false;
    if (!has(blocked, i))
        return stable_rec(g, i + 1, chosen | bit(i), blocked | g.nbrs(i), f);
    return true;
}

// Bron-Kerbosch with pivoting, run on the complement implicitly.
bool maximal_rec(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                 const std::function<bool(VertexSet)>& f) {
    if (p == 0 && x == 0) return f(r);
    int pivot = -1;
    int best = -1;
    for_each_bit(p | x, [&](int u) {
        int c = size_of(p & ~g.closed_nbrs(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    VertexSet branch = p & g.closed_nbrs(pivot);
    for (; branch; branch &= branch - 1) {
        int v = lowest(branch);
        VertexSet keep = ~g.closed_nbrs(v);
        if (!maximal_rec(g, r | bit(v), p & keep, x & keep, f)) return false;
        p &= ~bit(v);
        x |= bit(v);
    }
    return true;
}

int beta_rec(const Graph& g, VertexSet p, int taken, int best) {
    if (p == 0) return std::max(best, taken);
    if (taken + size_of(p) <= best) return best;
    // A vertex with at most one neighbour in p can always be taken.
    for (VertexSet s = p; s; s &= s - 1) {
        int v = lowest(s);
        if (size_of(g.nbrs(v) & p) <= 1)
            return beta_rec(g, p & ~g.closed_nbrs(v), taken + 1, best);
    }
    int v = lowest(p);
    int vd = -1;
    for_each_bit(p, [&](int u) {
        int d = size_of(g.nbrs(u) & p);
        if (d > vd) {
            vd = d;
            v = u;
        }
    });
    best = beta_rec(g, p & ~g.closed_nbrs(v), taken + 1, best);
    return beta_rec(g, p & ~bit(v), taken, best);
}

int nu_rec(const Graph& g, VertexSet p, std::unordered_map<VertexSet, int>& memo) {
    // Drop vertices with no partner left.
    VertexSet live = 0;
    for_each_bit(p, [&](int v) {
        if (g.nbrs(v) & p) live |= bit(v);
    });
    if (live == 0) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    int v = lowest(live);
    int best = nu_rec(g, live & ~bit(v), memo);
    for_each_bit(g.nbrs(v) & live, [&](int u) {
        best = std::max(best, 1 + nu_rec(g, live & ~bit(v) & ~bit(u), memo));
    });
    memo.emplace(live, best);
    return best;
}

std::string arc_name(const Digraph& d, int u, int v) {
    if (d.has_arc(u, v)) return "(" + d.name(u) + "," + d.name(v) + ")";
    return "(" + d.name(v) + "," + d.name(u) + ")";
}

void require_cover(const Digraph& d, VertexSet c) {
    if (!subset(c, d.all())) throw PreconditionError("vertex set is not contained in the graph");
    VertexSet outside = d.all() & ~c;
    for (VertexSet s = outside; s; s &= s - 1) {
        int u = lowest(s);
        VertexSet bad = d.nbrs(u) & outside;
        if (bad)
            throw PreconditionError("not a vertex cover: edge " + arc_name(d, u, lowest(bad)) +
                                    " is uncovered");
    }
}

}  // namespace

void for_each_stable_set(const Graph& g, const std::function<bool(VertexSet)>& f) {
    stable_rec(g, 0, 0, 0, f);
}

void for_each_maximal_stable_set(const Graph& g, const std::function<bool(VertexSet)>& f) {
    maximal_rec(g, 0, g.all(), 0, f);
}

void for_each_vertex_cover(const Digraph& d, const std::function<bool(VertexSet)>& f) {
    VertexSet all = d.all();
    for_each_stable_set(d.underlying(), [&](VertexSet s) { return f(all & ~s); });
}

std::vector<VertexSet> all_vertex_covers(const Digraph& d) {
    std::vector<VertexSet> out;
    for_each_vertex_cover(d, [&](VertexSet c) {
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Digraph& d) {
    std::vector<VertexSet> out;
    for (VertexSet s : maximal_stable_sets(d.underlying())) out.push_back(d.all() & ~s);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_stable_set(g, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

CoverAnalysis classify_cover(const Digraph& d, VertexSet c) {
    CoverAnalysis a;
    a.cover = c;
    VertexSet outside = d.all() & ~c;
    for_each_bit(c, [&](int x) {
        if (d.out_nbrs(x) & outside)
            a.l1 |= bit(x);
        else if (d.in_nbrs(x) & outside)
            a.l2 |= bit(x);
        else
            a.l3 |= bit(x);
    });
    VertexSet sources = (c & ~a.l1) & d.v_plus();
    a.strong = true;
    for_each_bit(a.l3, [&](int x) {
        if ((d.in_nbrs(x) & sources) == 0) a.strong = false;
    });
    return a;
}

CoverAnalysis analyze_cover(const Digraph& d, VertexSet c) {
    require_cover(d, c);
    return classify_cover(d, c);
}

int beta(const Graph& g) { return beta_rec(g, g.all(), 0, 0); }

int tau(const Graph& g) { return g.size() - beta(g); }

int nu(const Graph& g) {
    std::unordered_map<VertexSet, int> memo;
    return nu_rec(g, g.all(), memo);
}

bool is_konig(const Graph& g) { return tau(g) == nu(g); }

bool is_well_covered(const Graph& g) {
    int size = -1;
    bool ok = true;
    for_each_maximal_stable_set(g, [&](VertexSet s) {
        if (size < 0) size = size_of(s);
        if (size_of(s) != size) ok = false;
        return ok;
    });
    return ok;
}

int oracle_vertex_bound() {
    if (const char* env = std::getenv("WOG_ORACLE_MAX_VERTICES")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return std::min(v, kMaxVertices);
        } catch (const std::exception&) {
        }
    }
    return 20;
}

void check_oracle_bound(const Digraph& d) {
    int bound = oracle_vertex_bound();
    if (d.size() > bound)
        throw CapacityError("graph has " + std::to_string(d.size()) +
                            " vertices; the cover oracle is limited to " + std::to_string(bound) +
                            " (set WOG_ORACLE_MAX_VERTICES to raise it)");
}

std::vector<VertexSet> strong_vertex_covers(const Digraph& d) {
    check_oracle_bound(d);
    std::vector<VertexSet> out;
    for_each_vertex_cover(d, [&](VertexSet c) {
        if (classify_cover(d, c).strong) out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Verdict oracle_unmixed(const Digraph& d) {
    check_oracle_bound(d);
    Verdict v;
    std::optional<VertexSet> smallest, largest, l3;
    for_each_vertex_cover(d, [&](VertexSet c) {
        CoverAnalysis a = classify_cover(d, c);
        if (!a.strong) return true;
        ++v.strong_count;
        ++v.sizes[size_of(c)];
        if (!smallest || size_of(c) < size_of(*smallest) ||
            (size_of(c) == size_of(*smallest) && canonical_less(c, *smallest)))
            smallest = c;
        if (!largest || size_of(c) > size_of(*largest) ||
            (size_of(c) == size_of(*largest) && canonical_less(c, *largest)))
            largest = c;
        if (a.l3 && (!l3 || canonical_less(c, *l3))) l3 = c;
        return true;
    });
    // Minimal covers are strong, so there is always at least one.
    if (!smallest) throw ConsistencyError("no strong vertex cover found");
    bool equal_sizes = v.sizes.size() == 1;
    bool third_form = !l3 && is_well_covered(d.underlying());
    if (equal_sizes != third_form)
        throw ConsistencyError(
            "strong cover cardinalities and the well-covered/L3 criterion disagree");
    v.l3_witness = l3;
    if (equal_sizes) {
        v.status = Status::unmixed;
        v.cardinality = size_of(*smallest);
    } else {
        v.status = Status::mixed;
        v.smaller = smallest;
        v.larger = largest;
    }
    return v;
}

VertexSet strengthen(const Digraph& d, VertexSet c, VertexSet a) {
    require_cover(d, c);
    if (!subset(a, d.v_plus()))
        throw PreconditionError("strengthen: A contains a vertex of weight 1");
    VertexSet keep = d.out_nbrs_of_set(a);
    if (!subset(keep, c)) throw PreconditionError("strengthen: N+(A) is not contained in C");
    for (;;) {
        VertexSet eligible = classify_cover(d, c).l3 & ~keep;
        if (!eligible) break;
        c &= ~bit(lowest(eligible));
    }
    CoverAnalysis res = classify_cover(d, c);
    if (!res.strong || !is_vertex_cover(d, c))
        throw ConsistencyError("strengthen produced a cover that is not strong");
    return c;
}

namespace {

bool choose_zs(const Digraph& d, const std::vector<int>& xs, std::size_t i, VertexSet avoid,
               VertexSet chosen, VertexSet blocked, std::vector<int>& zs) {
    if (i == xs.size()) return true;
    VertexSet cand = d.nbrs(xs[i]) & ~avoid;
    for (; cand; cand &= cand - 1) {
        int z = lowest(cand);
        bool fits = has(chosen, z) || !has(blocked, z);
        if (!fits) continue;
        zs.push_back(z);
        VertexSet nc = chosen | bit(z);
        VertexSet nb = has(chosen, z) ? blocked : blocked | d.nbrs(z);
        if (choose_zs(d, xs, i + 1, avoid, nc, nb, zs)) return true;
        zs.pop_back();
    }
    return false;
}

}  // namespace

std::optional<StableSetWitness> stable_set_mixed_witness(const Digraph& d) {
    for (VertexSet ys = d.v_plus(); ys; ys &= ys - 1) {
        int y = lowest(ys);
        for (VertexSet xset = d.out_nbrs(y); xset; xset &= xset - 1) {
            int x = lowest(xset);
            std::vector<int> xs = members(d.nbrs(x) & ~bit(y));
            for (VertexSet zset = d.in_nbrs(y) & ~d.closed_nbrs(x); zset; zset &= zset - 1) {
                int z = lowest(zset);
                VertexSet chosen = bit(z) | bit(x);
                VertexSet blocked = d.nbrs(z) | d.nbrs(x);
                std::vector<int> zs;
                if (!choose_zs(d, xs, 0, d.out_nbrs(y), chosen, blocked, zs)) continue;

                VertexSet s = chosen;
                for (int z2 : zs) s |= bit(z2);
                VertexSet block = d.nbrs_of_set(s);
                for (int v = 0; v < d.size(); ++v)
                    if (!has(s, v) && !has(block, v)) {
                        s |= bit(v);
                        block |= d.nbrs(v);
                    }
                VertexSet c = (d.all() & ~s) | d.out_nbrs(y);
                VertexSet strong = strengthen(d, c, bit(y));
                CoverAnalysis a = classify_cover(d, strong);
                if (!a.strong || !has(a.l3, x))
                    throw ConsistencyError("stable-set witness cover does not put x in L3");
                StableSetWitness w;
                w.z = z;
                w.y = y;
                w.x = x;
                w.xs = xs;
                w.zs = zs;
                w.cover = strong;
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace wog
