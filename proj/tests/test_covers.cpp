#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support.hpp"

using namespace wog;

TEST_CASE("covers of a single arc") {
    Digraph d = make({{"x", 1}, {"y", 1}}, {{"x", "y"}});
    auto all = all_vertex_covers(d);
    REQUIRE(all.size() == 3);
    CHECK(d.names_of(all[0]) == names({"x"}));
    CHECK(d.names_of(all[1]) == names({"y"}));
    CHECK(d.names_of(all[2]) == names({"x", "y"}));
    CHECK(minimal_vertex_covers(d).size() == 2);
}

TEST_CASE("edgeless graph has only the empty minimal cover") {
    Digraph d = make({{"a", 1}, {"b", 1}}, {});
    auto mins = minimal_vertex_covers(d);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == 0);
}

TEST_CASE("D2 minimal cover of size 5") {
    Digraph d = fixture("d2.json");
    VertexSet c = d.set_of({"x1", "x2", "y1", "y2", "y3"});
    auto mins = minimal_vertex_covers(d);
    CHECK(std::find(mins.begin(), mins.end(), c) != mins.end());
    CHECK(is_vertex_cover(d, c));
    CHECK_FALSE(is_vertex_cover(d, c & ~bit(d.index("y3"))));
}

TEST_CASE("analyze_cover on D2") {
    Digraph d = fixture("d2.json");
    CoverAnalysis a = analyze_cover(d, d.set_of({"x1", "x2", "x3", "y1", "y2", "y3"}));
    CHECK(d.names_of(a.l3) == names({"x1", "x2", "x3"}));
    CHECK(a.strong);
    CoverAnalysis b = analyze_cover(d, d.set_of({"x1", "x2", "x3", "y1", "y2", "z3"}));
    CHECK(d.names_of(b.l3) == names({"x1", "x2"}));
    CHECK(b.strong);
    CHECK((b.l1 | b.l2 | b.l3) == b.cover);
    CHECK((b.l1 & b.l2) == 0);
    CHECK((b.l2 & b.l3) == 0);
}

TEST_CASE("analyze_cover rejects non-covers naming the edge") {
    Digraph d = fixture("d2.json");
    try {
        analyze_cover(d, d.set_of({"x1", "x2"}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("(") != std::string::npos);
    }
}

TEST_CASE("minimal covers are strong with empty L3") {
    for (const char* f : {"d1.json", "d2.json", "d3.json", "d4.json"}) {
        Digraph d = fixture(f);
        if (d.size() > 20) continue;
        for (VertexSet c : minimal_vertex_covers(d)) {
            CoverAnalysis a = analyze_cover(d, c);
            CHECK(a.l3 == 0);
            CHECK(a.strong);
        }
    }
}

TEST_CASE("L3 is exactly the vertices with closed neighbourhood inside the cover") {
    Digraph d = fixture("d3.json");
    const auto mins = minimal_vertex_covers(d);
    for (VertexSet c : all_vertex_covers(d)) {
        CoverAnalysis a = analyze_cover(d, c);
        for (int v = 0; v < d.size(); ++v)
            CHECK(has(a.l3, v) == (has(c, v) && subset(d.closed_nbrs(v), c)));
        CHECK((a.l3 == 0) == std::binary_search(mins.begin(), mins.end(), c, canonical_less));
    }
}

TEST_CASE("graph numbers") {
    Graph k2 = complete_graph(2);
    CHECK(tau(k2) == 1);
    CHECK(beta(k2) == 1);
    CHECK(nu(k2) == 1);
    CHECK(is_konig(k2));
    CHECK(is_well_covered(k2));

    Graph star = graph_from(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(is_well_covered(star));
    auto sizes = maximal_stable_sets(star);
    REQUIRE(sizes.size() == 2);
    CHECK(size_of(sizes[0]) == 1);
    CHECK(size_of(sizes[1]) == 3);

    const Graph& p10 = catalog_entry("P10").graph;
    CHECK(beta(p10) == 4);
    CHECK(tau(p10) == 6);
    CHECK(is_well_covered(p10));

    Graph c5 = cycle_graph(5);
    CHECK(nu(c5) == 2);
    CHECK(tau(c5) == 3);
    CHECK_FALSE(is_konig(c5));
}

TEST_CASE("tau plus beta is the vertex count") {
    FuzzConfig cfg;
    cfg.seed = 11;
    cfg.count = 60;
    cfg.n_min = 1;
    cfg.n_max = 10;
    for (const Digraph& d : gen_random(cfg)) {
        Graph g = d.underlying();
        CHECK(tau(g) + beta(g) == g.size());
        CHECK(beta(g) == clique_number(g.complement()));
        int best = 0;
        for_each_maximal_stable_set(g, [&](VertexSet s) {
            best = std::max(best, size_of(s));
            return true;
        });
        CHECK(best == beta(g));
    }
}

TEST_CASE("oracle on the examples") {
    Digraph d2 = fixture("d2.json");
    Verdict v2 = oracle_unmixed(d2);
    CHECK(v2.status == Status::mixed);
    REQUIRE(v2.smaller);
    REQUIRE(v2.larger);
    CHECK(size_of(*v2.smaller) == 5);
    CHECK(size_of(*v2.larger) == 6);
    CHECK(v2.sizes.size() == 2);
    CHECK(v2.sizes.at(5) == 12);
    CHECK(v2.sizes.at(6) == 4);

    Digraph d4 = fixture("d4.json");
    Verdict v4 = oracle_unmixed(d4);
    CHECK(v4.status == Status::unmixed);
    CHECK(v4.cardinality == 6);
    CHECK(v4.strong_count == 17);
    CHECK_FALSE(v4.l3_witness);

    CHECK(oracle_unmixed(fixture("d3.json")).status == Status::mixed);
}

TEST_CASE("oriented C5 with weights 1 is unmixed") {
    Graph c5 = cycle_graph(5);
    Digraph d = orient(c5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {});
    Verdict v = oracle_unmixed(d);
    CHECK(v.status == Status::unmixed);
    CHECK(v.cardinality == 3);
    CHECK(v.strong_count == 5);
}

TEST_CASE("strong covers are the strong ones among all covers") {
    Digraph d = fixture("d3.json");
    auto strong = strong_vertex_covers(d);
    std::size_t expect = 0;
    for (VertexSet c : all_vertex_covers(d)) expect += classify_cover(d, c).strong;
    CHECK(strong.size() == expect);
    CHECK(std::is_sorted(strong.begin(), strong.end(), canonical_less));
}

TEST_CASE("oracle bound") {
    Digraph d1 = fixture("d1.json");
    CHECK_THROWS_AS(oracle_unmixed(d1), CapacityError);
    setenv("WOG_ORACLE_MAX_VERTICES", "5", 1);
    CHECK_THROWS_AS(oracle_unmixed(fixture("d2.json")), CapacityError);
    unsetenv("WOG_ORACLE_MAX_VERTICES");
    CHECK(oracle_vertex_bound() == 20);
}

TEST_CASE("strengthen") {
    Digraph d2 = fixture("d2.json");
    VertexSet a = d2.set_of({"x1", "x2", "x3"});
    VertexSet c1 = d2.set_of({"x1", "x2", "y1", "y2", "y3"}) | d2.out_nbrs_of_set(a);
    CHECK(d2.names_of(strengthen(d2, c1, a)) == names({"x1", "x2", "x3", "y1", "y2", "y3"}));
    VertexSet c2 = d2.all() & ~bit(d2.index("y3"));
    CHECK(d2.names_of(strengthen(d2, c2, a)) == names({"x1", "x2", "x3", "y1", "y2", "z3"}));

    for (VertexSet m : minimal_vertex_covers(d2)) CHECK(strengthen(d2, m, 0) == m);

    CHECK_THROWS_AS(strengthen(d2, d2.set_of({"x1"}), 0), PreconditionError);
    CHECK_THROWS_AS(strengthen(d2, d2.all(), d2.set_of({"y1"})), PreconditionError);
    CHECK_THROWS_AS(strengthen(d2, c1 & ~bit(d2.index("x3")), a), PreconditionError);
}

TEST_CASE("strengthen output is strong and sandwiched") {
    FuzzConfig cfg;
    cfg.seed = 5;
    cfg.count = 40;
    cfg.n_min = 3;
    cfg.n_max = 8;
    cfg.heavy_probability = 0.6;
    for (const Digraph& d : gen_random(cfg)) {
        VertexSet a = d.v_plus();
        VertexSet outa = d.out_nbrs_of_set(a);
        for (VertexSet c : all_vertex_covers(d)) {
            if (!subset(outa, c)) continue;
            VertexSet s = strengthen(d, c, a);
            CHECK(subset(outa, s));
            CHECK(subset(s, c));
            CHECK(analyze_cover(d, s).strong);
        }
    }
}

TEST_CASE("stable set witness") {
    Digraph d3 = fixture("d3.json");
    auto w = stable_set_mixed_witness(d3);
    REQUIRE(w);
    CHECK(d3.name(w->z) == "a");
    CHECK(d3.name(w->y) == "d2");
    CHECK(d3.name(w->x) == "d2p");
    CoverAnalysis a = analyze_cover(d3, w->cover);
    CHECK(a.strong);
    CHECK(has(a.l3, w->x));

    CHECK_FALSE(stable_set_mixed_witness(fixture("d4.json")));
    CHECK_FALSE(stable_set_mixed_witness(catalog_digraph("P13")));
}

TEST_CASE("stable set witness implies mixed") {
    FuzzConfig cfg;
    cfg.seed = 19;
    cfg.count = 80;
    cfg.n_min = 4;
    cfg.n_max = 9;
    cfg.heavy_probability = 0.5;
    int found = 0;
    for (const Digraph& d : gen_random(cfg)) {
        if (auto w = stable_set_mixed_witness(d)) {
            ++found;
            CHECK(oracle_unmixed(d).status == Status::mixed);
            CHECK(analyze_cover(d, w->cover).strong);
        }
    }
    CHECK(found > 0);
}
