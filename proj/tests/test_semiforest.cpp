#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support.hpp"

using namespace wog;

namespace {

Arc arc(const Digraph& d, const char* t, const char* h) { return {d.index(t), d.index(h)}; }

RootOrientedTree rot(const Digraph& d, const char* parent, std::vector<std::pair<const char*, const char*>> arcs) {
    RootOrientedTree t{d.index(parent), bit(d.index(parent)), {}};
    for (auto [a, b] : arcs) {
        t.arcs.push_back(arc(d, a, b));
        t.vertices |= bit(d.index(a)) | bit(d.index(b));
    }
    return t;
}

std::string n(int i) {
    static const std::map<int, std::string> special = {{1, "v1"},  {2, "w1"},  {16, "v2"}, {19, "w2"}, {22, "v3"},
                                                       {29, "w5"}, {31, "v5"}, {32, "v4"}, {35, "w4"}};
    auto it = special.find(i);
    return it != special.end() ? it->second : "u" + std::to_string(i);
}

// The semi-forest drawn for D1.
StarSemiForest d1_forest(const Digraph& d) {
    auto a = [&](int t, int h) { return Arc{d.index(n(t)), d.index(n(h))}; };
    auto tree = [&](int parent, std::vector<std::pair<int, int>> arcs) {
        RootOrientedTree t{d.index(n(parent)), bit(d.index(n(parent))), {}};
        for (auto [x, y] : arcs) {
            t.arcs.push_back(a(x, y));
            t.vertices |= bit(d.index(n(x))) | bit(d.index(n(y)));
        }
        return t;
    };
    StarSemiForest h;
    h.rots.push_back(tree(1, {}));
    h.rots.push_back(tree(16, {{16, 14}, {16, 17}, {17, 12}, {17, 18}, {18, 21}, {18, 15}}));
    h.rots.push_back(tree(22, {{22, 24}, {24, 25}, {24, 27}, {25, 20}, {25, 26}, {26, 23}}));
    h.rots.push_back(tree(32, {{32, 30}, {32, 33}, {33, 28}}));
    h.rots.push_back(tree(31, {{31, 34}, {34, 36}}));
    UnicycleSubgraph b;
    for (int v : {3, 6, 8, 9, 4}) b.cycle.push_back(d.index(n(v)));
    for (auto [x, y] : std::vector<std::pair<int, int>>{
             {3, 6}, {6, 8}, {8, 9}, {9, 4}, {4, 3}, {10, 13}, {8, 11}, {7, 5}, {10, 7}, {9, 10}}) {
        b.arcs.push_back(a(x, y));
        b.vertices |= bit(d.index(n(x))) | bit(d.index(n(y)));
    }
    h.unicycles.push_back(b);
    h.witness[d.index("v1")] = d.index("w1");
    h.witness[d.index("v2")] = d.index("w2");
    h.witness[d.index("v3")] = d.index("w2");
    h.witness[d.index("v4")] = d.index("w4");
    h.witness[d.index("v5")] = d.index("w5");
    h.w1 = d.set_of({"w1", "w5"});
    h.w2 = d.set_of({"w2", "w4"});
    return h;
}

}  // namespace

TEST_CASE("singleton ROT is valid for any weight") {
    Digraph d = make({{"u", 1}, {"v", 2}}, {{"u", "v"}});
    CHECK_FALSE(validate_rot(d, {0, bit(0), {}}));
    CHECK_FALSE(validate_rot(d, {1, bit(1), {}}));
}

TEST_CASE("weight-1 parent of a nontrivial ROT is rejected") {
    Digraph d = make({{"u", 1}, {"v", 1}}, {{"u", "v"}});
    auto v = validate_rot(d, rot(d, "u", {{"u", "v"}}));
    REQUIRE(v);
    CHECK(v->clause == "weight-one-leaf");
    CHECK(d.name(v->vertex) == "u");
}

TEST_CASE("ROT structural clauses") {
    Digraph d = make({{"a", 1}, {"b", 2}, {"c", 2}, {"d", 1}}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "d"}});
    CHECK_FALSE(validate_rot(d, rot(d, "b", {{"b", "c"}, {"c", "d"}})));
    auto path = validate_rot(d, rot(d, "c", {{"b", "c"}, {"c", "d"}}));
    REQUIRE(path);
    CHECK(path->clause == "oriented-path");
    auto cyc = validate_rot(d, rot(d, "b", {{"b", "c"}, {"c", "d"}, {"b", "d"}}));
    REQUIRE(cyc);
    CHECK(cyc->clause == "acyclic");
    RootOrientedTree foreign{d.index("a"), d.set_of({"a", "c"}), {arc(d, "a", "b")}};
    foreign.arcs.front() = {d.index("a"), d.index("c")};
    CHECK_THROWS_AS(validate_rot(d, foreign), StructuralError);
    RootOrientedTree outside = rot(d, "b", {{"b", "c"}});
    outside.vertices &= ~bit(d.index("c"));
    CHECK(validate_rot(d, outside)->clause == "arc-endpoints");
}

TEST_CASE("unicycle validation") {
    Digraph d = make({{"x", 2}, {"y", 2}, {"z", 2}, {"t", 1}},
                     {{"x", "y"}, {"y", "z"}, {"z", "x"}, {"z", "t"}}, false);
    UnicycleSubgraph b{{d.index("x"), d.index("y"), d.index("z")}, d.all(),
                       {arc(d, "x", "y"), arc(d, "y", "z"), arc(d, "z", "x"), arc(d, "z", "t")}};
    CHECK_FALSE(validate_unicycle(d, b));
    UnicycleSubgraph reversed = b;
    reversed.cycle = {d.index("x"), d.index("z"), d.index("y")};
    CHECK(validate_unicycle(d, reversed)->clause == "oriented-cycle");
    UnicycleSubgraph light = b;
    Digraph d2 = make({{"x", 2}, {"y", 1}, {"z", 2}, {"t", 1}},
                      {{"x", "y"}, {"y", "z"}, {"z", "x"}, {"z", "t"}}, false);
    auto v = validate_unicycle(d2, light);
    REQUIRE(v);
    CHECK(v->clause == "weight-one-leaf");
    CHECK(d2.name(v->vertex) == "y");
}

TEST_CASE("D1 component B1 is a unicycle") {
    Digraph d = fixture("d1.json");
    StarSemiForest h = d1_forest(d);
    CHECK_FALSE(validate_unicycle(d, h.unicycles.front()));
    for (const auto& t : h.rots) CHECK_FALSE(validate_rot(d, t));
}

TEST_CASE("D1 semi-forest validates") {
    Digraph d = fixture("d1.json");
    StarSemiForest h = d1_forest(d);
    auto v = validate_semiforest(d, h);
    CHECK_MESSAGE(!v, (v ? describe(d, *v) : ""));
    CHECK(subset(h_tilde(d, h), d.v_plus()));
}

TEST_CASE("D1 semi-forest clause violations") {
    Digraph d = fixture("d1.json");
    StarSemiForest h = d1_forest(d);
    StarSemiForest moved = h;
    moved.w1 &= ~bit(d.index("w1"));
    moved.w2 |= bit(d.index("w1"));
    auto v = validate_semiforest(d, moved);
    REQUIRE(v);
    CHECK(v->clause == "w2-arc");

    StarSemiForest light = h;
    light.w1 &= ~bit(d.index("w5"));
    light.w2 |= bit(d.index("w5"));
    v = validate_semiforest(d, light);
    REQUIRE(v);
    CHECK(v->clause == "w2-heavy");

    StarSemiForest missing = h;
    missing.witness.erase(d.index("v4"));
    CHECK(validate_semiforest(d, missing)->clause == "witness-map");

    StarSemiForest overlap = h;
    overlap.rots.push_back(overlap.rots.front());
    CHECK(validate_semiforest(d, overlap)->clause == "partition");
}

TEST_CASE("empty semi-forest") {
    Digraph d = fixture("d2.json");
    CHECK_FALSE(validate_semiforest(d, StarSemiForest{}));
    auto h = exists_generating_semiforest(d, 0);
    REQUIRE(h);
    CHECK(h->vertices() == 0);
    CHECK(semiforest_from_strong_cover(d, 0, minimal_vertex_covers(d).front()).vertices() == 0);
}

TEST_CASE("h_tilde") {
    Digraph d = make({{"v", 2}, {"x", 1}, {"y", 2}, {"z", 2}},
                     {{"y", "v"}, {"v", "x"}, {"y", "z"}, {"z", "v"}}, false);
    StarSemiForest one;
    one.rots.push_back(rot(d, "v", {{"v", "x"}}));
    CHECK(h_tilde(d, one) == bit(d.index("v")));
    StarSemiForest single;
    single.rots.push_back({d.index("x"), bit(d.index("x")), {}});
    CHECK(h_tilde(d, single) == 0);
    Digraph tri = make({{"a", 2}, {"b", 2}, {"c", 2}}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    StarSemiForest cyc;
    cyc.unicycles.push_back({{0, 1, 2}, tri.all(), {{0, 1}, {1, 2}, {2, 0}}});
    CHECK(h_tilde(tri, cyc) == tri.all());
}

TEST_CASE("D3 generating semi-forests") {
    Digraph d = fixture("d3.json");
    VertexSet k = d.set_of({"d2", "d2p"});
    auto h = exists_generating_semiforest(d, k);
    REQUIRE(h);
    REQUIRE(h->rots.size() == 1);
    CHECK(h->unicycles.empty());
    CHECK(d.name(h->rots[0].parent) == "d2");
    REQUIRE(h->rots[0].arcs.size() == 1);
    CHECK(h->rots[0].arcs[0] == arc(d, "d2", "d2p"));
    CHECK(d.name(h->witness.at(d.index("d2"))) == "a");

    StarSemiForest drawn;
    drawn.rots.push_back(rot(d, "d2", {{"d2", "d2p"}}));
    drawn.witness[d.index("d2")] = d.index("a");
    drawn.w2 = d.set_of({"a"});
    CHECK_FALSE(validate_semiforest(d, drawn));

    VertexSet k1 = d.set_of({"d1", "d1p"});
    CHECK_FALSE(exists_generating_semiforest(d, k1));
    CHECK_FALSE(strong_cover_superset_exists(d, k1));
}

TEST_CASE("single vertex K gives a singleton ROT") {
    Digraph d = fixture("d2.json");
    for (int v = 0; v < d.size(); ++v) {
        auto h = exists_generating_semiforest(d, bit(v));
        REQUIRE(h);
        REQUIRE(h->rots.size() == 1);
        CHECK(h->rots[0].vertices == bit(v));
        CHECK(d.adjacent(v, h->witness.at(v)));
    }
}

TEST_CASE("strong cover superset on D2") {
    Digraph d = fixture("d2.json");
    auto c = strong_cover_superset_exists(d, d.set_of({"x1", "x2", "x3"}));
    REQUIRE(c);
    CHECK(d.names_of(*c) == names({"x1", "x2", "x3", "y1", "y2", "y3"}));
    auto c0 = strong_cover_superset_exists(d, 0);
    REQUIRE(c0);
    CHECK(analyze_cover(d, *c0).l3 == 0);
    CHECK(size_of(*c0) == 5);
}

TEST_CASE("forest from a strong cover of D2") {
    Digraph d = fixture("d2.json");
    VertexSet k = d.set_of({"x1", "x2", "x3"});
    StarSemiForest h = semiforest_from_strong_cover(d, k, d.set_of({"x1", "x2", "x3", "y1", "y2", "y3"}));
    CHECK(h.vertices() == k);
    CHECK_FALSE(validate_semiforest(d, h));
    REQUIRE(h.unicycles.size() == 1);
    CHECK(h.unicycles[0].cycle.size() == 3);

    CHECK_THROWS_AS(semiforest_from_strong_cover(d, k, d.set_of({"x1", "x2", "y1", "y2", "y3"})),
                    PreconditionError);
}

TEST_CASE("a lone L2 vertex becomes a singleton ROT") {
    Digraph d = fixture("d2.json");
    VertexSet c = d.set_of({"x1", "x2", "y1", "y2", "y3"});
    CoverAnalysis a = analyze_cover(d, c);
    REQUIRE(a.l2 != 0);
    int z = lowest(a.l2);
    StarSemiForest h = semiforest_from_strong_cover(d, bit(z), c);
    REQUIRE(h.rots.size() == 1);
    CHECK(h.rots[0].vertices == bit(z));
    CHECK_FALSE(has(c, h.witness.at(z)));
    CHECK(has(h.w1, h.witness.at(z)));
}

TEST_CASE("D1 vertex set has a generating semi-forest") {
    Digraph d = fixture("d1.json");
    VertexSet k = d1_forest(d).vertices();
    auto h = exists_generating_semiforest(d, k);
    REQUIRE(h);
    CHECK(h->vertices() == k);
}

TEST_CASE("frontier bound") {
    Digraph d = fixture("d1.json");
    setenv("WOG_SEMIFOREST_MAX_FRONTIER", "2", 1);
    CHECK_THROWS_AS(exists_generating_semiforest(d, d1_forest(d).vertices()), CapacityError);
    unsetenv("WOG_SEMIFOREST_MAX_FRONTIER");
}

TEST_CASE("existence agrees with strong covers on random graphs") {
    FuzzConfig cfg;
    cfg.seed = 3;
    cfg.count = 60;
    cfg.n_min = 3;
    cfg.n_max = 8;
    cfg.heavy_probability = 0.6;
    for (const Digraph& d : gen_random(cfg)) {
        auto strong = strong_vertex_covers(d);
        for (VertexSet k = 0; k <= d.all(); ++k) {
            bool cover = std::any_of(strong.begin(), strong.end(), [&](VertexSet c) { return subset(k, c); });
            auto h = exists_generating_semiforest(d, k);
            CHECK(h.has_value() == cover);
            if (h) {
                CHECK(h->vertices() == k);
                CHECK_FALSE(validate_semiforest(d, *h));
            }
        }
    }
}
