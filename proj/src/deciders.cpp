#include "wog/deciders.hpp"

#include <algorithm>
#include <functional>

namespace wog {

namespace {

FamilyReport verdict(std::string family, Status s, Certificate c = {}) {
    return {std::move(family), true, s, std::move(c)};
}

FamilyReport not_applicable(std::string family, std::string note) {
    Certificate c;
    c.note = std::move(note);
    return {std::move(family), false, Status::not_applicable, std::move(c)};
}

std::string arc_text(const Digraph& d, Arc a) {
    return "(" + d.name(a.first) + "," + d.name(a.second) + ")";
}

std::string set_text(const Digraph& d, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : d.names_of(s)) {
        out += (first ? "" : ",") + n;
        first = false;
    }
    return out + "}";
}

bool has_isolated(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

std::optional<int> non_sink_heavy(const Digraph& d, VertexSet within) {
    for (VertexSet s = d.v_plus() & within; s; s &= s - 1)
        if (!d.is_sink(lowest(s))) return lowest(s);
    return std::nullopt;
}

// First simplex among `cliques` admitting a generating semi-forest.
std::optional<std::pair<VertexSet, StarSemiForest>> forest_in(const Digraph& d,
                                                              const std::vector<VertexSet>& cliques) {
    for (VertexSet k : cliques)
        if (auto h = exists_generating_semiforest(d, k)) return std::make_pair(k, std::move(*h));
    return std::nullopt;
}

bool partitions(const std::vector<VertexSet>& parts, VertexSet all) {
    VertexSet seen = 0;
    for (VertexSet p : parts) {
        if (seen & p) return false;
        seen |= p;
    }
    return seen == all;
}

// N(b) within N+(a) whenever a is heavy, {b,b'} is in m and b' in N+(a).
std::optional<Arc> matching_arc_violation(const Digraph& d, const std::vector<Edge>& m) {
    for (auto [u, v] : m)
        for (auto [b, bp] : {Edge{u, v}, Edge{v, u}})
            for (VertexSet as = d.in_nbrs(bp) & d.v_plus(); as; as &= as - 1) {
                int a = lowest(as);
                if (!subset(d.nbrs(b), d.out_nbrs(a))) return Arc{a, bp};
            }
    return std::nullopt;
}

void perfect_matchings(const Graph& g, VertexSet left, const std::vector<Edge>& allowed,
                       std::vector<Edge>& cur, const std::function<bool(const std::vector<Edge>&)>& f,
                       bool& stop) {
    if (stop) return;
    if (!left) {
        if (!f(cur)) stop = true;
        return;
    }
    int v = lowest(left);
    for (auto e : allowed) {
        if (stop) return;
        int u;
        if (e.first == v) u = e.second;
        else if (e.second == v) u = e.first;
        else continue;
        if (!has(left, u)) continue;
        cur.push_back(e);
        perfect_matchings(g, left & ~bit(u) & ~bit(v), allowed, cur, f, stop);
        cur.pop_back();
    }
}

// Certificate-bearing check that simplexes in `within` partition it and none
// admits a generating semi-forest.
std::optional<Certificate> simplex_clause_fails(const Digraph& d, const Graph& g, VertexSet within) {
    std::vector<VertexSet> simp;
    for (VertexSet s : simplexes(g))
        if (subset(s, within)) simp.push_back(s);
    Certificate c;
    if (!partitions(simp, within)) {
        c.note = "simplexes do not partition the vertices";
        return c;
    }
    if (auto hit = forest_in(d, simp)) {
        c.note = "simplex " + set_text(d, hit->first) + " has a generating semi-forest";
        c.clique = hit->first;
        c.forest = std::move(hit->second);
        return c;
    }
    return std::nullopt;
}

bool all_sinks(const Digraph& d, VertexSet within) { return !non_sink_heavy(d, within); }

Certificate sinks_note(const Digraph& d, VertexSet within, const SpecialGraphId& id) {
    Certificate c;
    c.special = id;
    c.component = within;
    if (auto y = non_sink_heavy(d, within)) c.note = id.name + " with non-sink heavy vertex " + d.name(*y);
    else c.note = id.name + " with every heavy vertex a sink";
    return c;
}

FamilyReport per_component(const Digraph& d, std::string family,
                           const std::function<std::pair<bool, Certificate>(VertexSet)>& decide) {
    const Graph g = d.underlying();
    Certificate all;
    bool unmixed = true;
    for (VertexSet comp : g.connected_components()) {
        auto [ok, cert] = decide(comp);
        cert.component = comp;
        if (!ok) {
            unmixed = false;
            if (all.note.empty()) all.note = "component " + set_text(d, comp) + ": " + cert.note;
        }
        all.components.push_back(std::move(cert));
    }
    if (unmixed) all.note = "every component satisfies the characterization";
    return verdict(std::move(family), unmixed ? Status::unmixed : Status::mixed, std::move(all));
}

}  // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "perfect",      "konig",        "scq",       "simplicial-or-chordal", "no-3-5-cycles",
        "no-4-5-cycles", "girth-ge-6", "girth-ge-5", "sinks-sufficient"};
    return names;
}

bool family_applicable(const Digraph& d, std::string_view family) {
    const Graph g = d.underlying();
    if (family == "perfect") return is_perfect(g);
    if (family == "konig") return is_konig(g) && !has_isolated(g);
    if (family == "scq") return scq_decompose(g).has_value();
    if (family == "simplicial-or-chordal") return is_simplicial_graph(g) || is_chordal(g);
    if (family == "no-3-5-cycles") return !has_cycle_of_length(g, 3) && !has_cycle_of_length(g, 5);
    if (family == "no-4-5-cycles") return !has_cycle_of_length(g, 4) && !has_cycle_of_length(g, 5);
    if (family == "girth-ge-6") {
        auto gi = girth(g);
        return (!gi || *gi >= 6) && !has_isolated(g);
    }
    if (family == "girth-ge-5") return !has_cycle_of_length(g, 3) && !has_cycle_of_length(g, 4);
    if (family == "sinks-sufficient") return true;
    throw LookupError("unknown family '" + std::string(family) + "'");
}

FamilyReport decide_sinks_sufficient(const Digraph& d) {
    const std::string fam = "sinks-sufficient";
    Certificate c;
    if (!is_well_covered(d.underlying())) {
        c.note = "underlying graph is not well-covered";
        return verdict(fam, Status::unknown, c);
    }
    if (auto y = non_sink_heavy(d, d.all())) {
        c.note = "heavy vertex " + d.name(*y) + " is not a sink";
        return verdict(fam, Status::unknown, c);
    }
    c.note = "well-covered and every heavy vertex is a sink";
    return verdict(fam, Status::unmixed, c);
}

FamilyReport decide_konig(const Digraph& d) {
    const std::string fam = "konig";
    if (!family_applicable(d, fam)) return not_applicable(fam, "not Konig or has isolated vertices");
    const Graph g = d.underlying();
    std::vector<Edge> pedges;
    for (auto e : g.edges())
        if (edge_has_property_p(g, e)) pedges.push_back(e);
    std::optional<std::vector<Edge>> good, first;
    std::optional<Arc> bad_arc;
    std::vector<Edge> cur;
    bool stop = false;
    perfect_matchings(g, g.all(), pedges, cur, [&](const std::vector<Edge>& m) {
        auto viol = matching_arc_violation(d, m);
        if (!viol) {
            good = m;
            return false;
        }
        if (!first) {
            first = m;
            bad_arc = viol;
        }
        return true;
    }, stop);
    Certificate c;
    if (good) {
        c.matching = good;
        c.note = "perfect matching with property (P) meets the arc condition";
        return verdict(fam, Status::unmixed, c);
    }
    if (!first) {
        c.note = "no perfect matching with property (P)";
        return verdict(fam, Status::mixed, c);
    }
    c.matching = first;
    c.arc = bad_arc;
    c.note = "arc " + arc_text(d, *bad_arc) + " breaks the neighbourhood condition on every matching";
    return verdict(fam, Status::mixed, c);
}

FamilyReport decide_scq(const Digraph& d) {
    const std::string fam = "scq";
    const Graph g = d.underlying();
    auto dec = scq_decompose(g);
    if (!dec) return not_applicable(fam, "no SCQ decomposition");
    Certificate c;
    c.decomposition = dec;
    for (const auto& cyc : basic_five_cycles(g)) {
        StarCheck st = star_property(d, cyc);
        if (!st.holds) {
            c.cycle = cyc;
            c.arc = st.arc;
            c.note = "basic 5-cycle fails " + st.clause + " at arc " + arc_text(d, st.arc);
            return verdict(fam, Status::mixed, c);
        }
    }
    if (auto hit = forest_in(d, simplexes(g))) {
        c.clique = hit->first;
        c.forest = std::move(hit->second);
        c.note = "simplex " + set_text(d, hit->first) + " has a generating semi-forest";
        return verdict(fam, Status::mixed, c);
    }
    if (auto a = matching_arc_violation(d, dec->matching)) {
        c.arc = a;
        c.matching = dec->matching;
        c.note = "arc " + arc_text(d, *a) + " breaks the neighbourhood condition on the matching";
        return verdict(fam, Status::mixed, c);
    }
    c.note = "basic 5-cycles have the star property, simplexes have no generating semi-forest";
    return verdict(fam, Status::unmixed, c);
}

FamilyReport decide_simplicial_or_chordal(const Digraph& d) {
    const std::string fam = "simplicial-or-chordal";
    if (!family_applicable(d, fam)) return not_applicable(fam, "neither simplicial nor chordal");
    const Graph g = d.underlying();
    if (auto fail = simplex_clause_fails(d, g, g.all())) return verdict(fam, Status::mixed, *fail);
    Certificate c;
    c.note = "simplexes partition the vertices and none has a generating semi-forest";
    return verdict(fam, Status::unmixed, c);
}

FamilyReport decide_perfect(const Digraph& d) {
    const std::string fam = "perfect";
    if (!family_applicable(d, fam)) return not_applicable(fam, "not perfect");
    const Graph g = d.underlying();
    Certificate c;
    c.reduction = tau_clique_reduction(g);
    if (auto hit = forest_in(d, c.reduction->cliques)) {
        c.clique = hit->first;
        c.forest = std::move(hit->second);
        c.note = "clique " + set_text(d, hit->first) + " has a generating semi-forest";
        return verdict(fam, Status::mixed, c);
    }
    c.note = "no clique of the tau-reduction has a generating semi-forest";
    return verdict(fam, Status::unmixed, c);
}

FamilyReport decide_no_3_5_cycles(const Digraph& d) {
    const std::string fam = "no-3-5-cycles";
    if (!family_applicable(d, fam)) return not_applicable(fam, "has a 3-cycle or a 5-cycle");
    Certificate c;
    if (!is_well_covered(d.underlying())) {
        c.note = "underlying graph is not well-covered";
        return verdict(fam, Status::mixed, c);
    }
    for (auto [y, x] : d.arcs()) {
        if (!d.heavy(y)) continue;
        bool found = false;
        for (VertexSet s = d.nbrs(x) & ~bit(y); s && !found; s &= s - 1)
            if (subset(d.nbrs(lowest(s)), d.out_nbrs(y))) found = true;
        if (!found) {
            c.arc = Arc{y, x};
            c.note = "no neighbour y' of " + d.name(x) + " with N(y') inside N+(" + d.name(y) + ")";
            return verdict(fam, Status::mixed, c);
        }
    }
    c.note = "well-covered and every heavy arc has a dominated neighbour";
    return verdict(fam, Status::unmixed, c);
}

FamilyReport decide_no_4_5_cycles(const Digraph& d) {
    const std::string fam = "no-4-5-cycles";
    if (!family_applicable(d, fam)) return not_applicable(fam, "has a 4-cycle or a 5-cycle");
    const Graph g = d.underlying();
    return per_component(d, fam, [&](VertexSet comp) -> std::pair<bool, Certificate> {
        const Graph cg = g.induced(comp);
        for (const char* name : {"C7", "T10"})
            if (auto id = identify_as(cg, name)) {
                Certificate c = sinks_note(d, comp, *id);
                if (all_sinks(d, comp)) return {true, c};
            }
        if (auto fail = simplex_clause_fails(d, g, comp)) return {false, *fail};
        Certificate c;
        c.note = "simplexes partition the component and none has a generating semi-forest";
        return {true, c};
    });
}

namespace {

bool leaf_matching(const Digraph& d, VertexSet left, std::vector<Edge>& cur) {
    if (!left) return true;
    int v = lowest(left);
    for (VertexSet s = d.nbrs(v) & left; s; s &= s - 1) {
        int u = lowest(s);
        // (x, x') with deg(x') = 1 and (x', x) an arc when x is heavy
        for (auto [x, xp] : {Edge{v, u}, Edge{u, v}}) {
            if (d.degree(xp) != 1) continue;
            if (d.heavy(x) && !d.has_arc(xp, x)) continue;
            cur.emplace_back(x, xp);
            if (leaf_matching(d, left & ~bit(u) & ~bit(v), cur)) return true;
            cur.pop_back();
        }
    }
    return false;
}

}  // namespace

FamilyReport decide_girth_ge_6(const Digraph& d) {
    const std::string fam = "girth-ge-6";
    if (!family_applicable(d, fam)) return not_applicable(fam, "girth below 6 or isolated vertices");
    const Graph g = d.underlying();
    return per_component(d, fam, [&](VertexSet comp) -> std::pair<bool, Certificate> {
        if (auto id = identify_as(g.induced(comp), "C7")) {
            Certificate c = sinks_note(d, comp, *id);
            if (all_sinks(d, comp)) return {true, c};
        }
        std::vector<Edge> m;
        Certificate c;
        if (leaf_matching(d, comp, m)) {
            c.matching = m;
            c.note = "perfect matching onto leaves, heavy vertices fed by their leaf";
            return {true, c};
        }
        c.note = "no suitable perfect matching onto leaves";
        return {false, c};
    });
}

bool p10_clause_holds(const Digraph& d) {
    const Graph g = d.underlying();
    const Graph& p10 = catalog_entry("P10").graph;
    const int d1 = p10.index("d1"), d2 = p10.index("d2");
    const VertexSet out1 = p10.set_of({"g1", "b2"});
    const VertexSet out2 = p10.set_of({"g2", "b1"});
    bool holds = false;
    for_each_isomorphism(g, p10, [&](const std::vector<int>& phi) {
        bool ok = true;
        for (VertexSet s = d.v_plus(); s && ok; s &= s - 1) {
            int y = lowest(s);
            if (d.is_sink(y)) continue;
            VertexSet img = 0;
            for_each_bit(d.out_nbrs(y), [&](int x) { img |= bit(phi[x]); });
            ok = (phi[y] == d1 && img == out1) || (phi[y] == d2 && img == out2);
        }
        if (ok) holds = true;
        return !holds;
    });
    return holds;
}

FamilyReport decide_girth_ge_5(const Digraph& d) {
    const std::string fam = "girth-ge-5";
    if (!family_applicable(d, fam)) return not_applicable(fam, "has a 3-cycle or a 4-cycle");
    const Graph g = d.underlying();
    const auto all_cycles = basic_five_cycles(g);
    return per_component(d, fam, [&](VertexSet comp) -> std::pair<bool, Certificate> {
        const Graph cg = g.induced(comp);
        for (const char* name : {"K1", "C7", "Q13", "P13", "P14"})
            if (auto id = identify_as(cg, name)) {
                Certificate c = sinks_note(d, comp, *id);
                if (all_sinks(d, comp)) return {true, c};
            }
        if (auto id = identify_as(cg, "P10")) {
            if (p10_clause_holds(d.induced(comp))) {
                Certificate c;
                c.special = id;
                c.note = "P10 whose non-sink heavy vertices point as the characterization requires";
                return {true, c};
            }
        }
        std::vector<VertexSet> parts;
        std::vector<VertexSet> simp;
        for (VertexSet s : simplexes(g))
            if (subset(s, comp)) {
                simp.push_back(s);
                parts.push_back(s);
            }
        std::vector<std::vector<int>> cycles;
        for (const auto& cyc : all_cycles) {
            VertexSet s = 0;
            for (int v : cyc) s |= bit(v);
            if (subset(s, comp)) {
                cycles.push_back(cyc);
                parts.push_back(s);
            }
        }
        Certificate c;
        if (!partitions(parts, comp)) {
            c.note = "simplexes and basic 5-cycles do not partition the component";
            return {false, c};
        }
        if (auto hit = forest_in(d, simp)) {
            c.clique = hit->first;
            c.forest = std::move(hit->second);
            c.note = "simplex " + set_text(d, hit->first) + " has a generating semi-forest";
            return {false, c};
        }
        for (const auto& cyc : cycles) {
            StarCheck st = star_property(d, cyc);
            if (!st.holds) {
                c.cycle = cyc;
                c.arc = st.arc;
                c.note = "basic 5-cycle fails " + st.clause + " at arc " + arc_text(d, st.arc);
                return {false, c};
            }
        }
        c.note = "simplexes and basic 5-cycles partition the component and satisfy the conditions";
        return {true, c};
    });
}

FamilyReport decide_family(const Digraph& d, std::string_view family) {
    if (family == "perfect") return decide_perfect(d);
    if (family == "konig") return decide_konig(d);
    if (family == "scq") return decide_scq(d);
    if (family == "simplicial-or-chordal") return decide_simplicial_or_chordal(d);
    if (family == "no-3-5-cycles") return decide_no_3_5_cycles(d);
    if (family == "no-4-5-cycles") return decide_no_4_5_cycles(d);
    if (family == "girth-ge-6") return decide_girth_ge_6(d);
    if (family == "girth-ge-5") return decide_girth_ge_5(d);
    if (family == "sinks-sufficient") return decide_sinks_sufficient(d);
    throw LookupError("unknown family '" + std::string(family) + "'");
}

DispatchResult dispatch(const Digraph& d, bool run_oracle) {
    DispatchResult out;
    for (const auto& fam : family_names()) {
        bool applicable;
        try {
            applicable = family_applicable(d, fam);
        } catch (const CapacityError& e) {
            out.reports.push_back(not_applicable(fam, std::string("skipped: ") + e.what()));
            continue;
        }
        try {
            out.reports.push_back(decide_family(d, fam));
        } catch (const CapacityError& e) {
            Certificate c;
            c.note = std::string("skipped: ") + e.what();
            out.reports.push_back({fam, applicable, Status::unknown, c});
        }
    }
    if (run_oracle && d.size() <= oracle_vertex_bound()) out.oracle = oracle_unmixed(d);

    std::optional<Status> agreed;
    std::string who;
    bool clash = false;
    auto note = [&](const std::string& name, Status s) {
        if (s != Status::unmixed && s != Status::mixed) return;
        if (!agreed) {
            agreed = s;
            who = name;
        } else if (*agreed != s) {
            clash = true;
        }
    };
    if (out.oracle) note("oracle", out.oracle->status);
    for (const auto& r : out.reports) note(r.family, r.verdict);
    out.consensus = agreed.value_or(Status::unknown);
    if (clash) {
        std::string msg = "verdicts disagree:";
        if (out.oracle) msg += std::string(" oracle=") + to_string(out.oracle->status);
        for (const auto& r : out.reports)
            if (r.verdict == Status::unmixed || r.verdict == Status::mixed)
                msg += " " + r.family + "=" + to_string(r.verdict);
        throw DisagreementError(msg, std::move(out));
    }
    return out;
}

}  // namespace wog
