#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

struct CoverAnalysis {
    VertexSet cover = 0;
    VertexSet l1 = 0;
    VertexSet l2 = 0;
    VertexSet l3 = 0;
    bool strong = false;
};

enum class Status { unmixed, mixed, not_applicable, unknown };
const char* to_string(Status s);

struct Verdict {
    Status status = Status::unknown;
    // mixed: two strong covers of different sizes, smallest and largest
    // cardinality, each the canonical first of its size.
    std::optional<VertexSet> smaller;
    std::optional<VertexSet> larger;
    // First strong cover with nonempty L3, if any.
    std::optional<VertexSet> l3_witness;
    // unmixed: common cardinality and number of strong covers.
    int cardinality = 0;
    long long strong_count = 0;
    // Strong cover counts by size.
    std::map<int, long long> sizes;
};

bool is_vertex_cover(const Digraph& d, VertexSet c);
bool is_vertex_cover(const Graph& g, VertexSet c);

// Calls f on every stable set; f returns false to stop.
void for_each_stable_set(const Graph& g, const std::function<bool(VertexSet)>& f);
void for_each_maximal_stable_set(const Graph& g, const std::function<bool(VertexSet)>& f);
// Covers are complements of stable sets; visited in no particular order.
void for_each_vertex_cover(const Digraph& d, const std::function<bool(VertexSet)>& f);

// Sorted canonically (cardinality, then lexicographic).
std::vector<VertexSet> all_vertex_covers(const Digraph& d);
std::vector<VertexSet> minimal_vertex_covers(const Digraph& d);
std::vector<VertexSet> maximal_stable_sets(const Graph& g);

CoverAnalysis analyze_cover(const Digraph& d, VertexSet c);
// Same as analyze_cover without the precondition check.
CoverAnalysis classify_cover(const Digraph& d, VertexSet c);

int beta(const Graph& g);
int tau(const Graph& g);
int nu(const Graph& g);
bool is_konig(const Graph& g);
bool is_well_covered(const Graph& g);

int oracle_vertex_bound();
void check_oracle_bound(const Digraph& d);

// Strong covers in canonical order.
std::vector<VertexSet> strong_vertex_covers(const Digraph& d);
Verdict oracle_unmixed(const Digraph& d);

// Deletes the smallest vertex of L3(C) \ N+(A) until none is left.
VertexSet strengthen(const Digraph& d, VertexSet c, VertexSet a);

struct StableSetWitness {
    int z = -1;
    int y = -1;
    int x = -1;
    std::vector<int> xs;  // N(x) \ {y}
    std::vector<int> zs;  // zs[i] in N(xs[i]) \ N+(y)
    VertexSet cover = 0;  // strong cover with x in L3
};

std::optional<StableSetWitness> stable_set_mixed_witness(const Digraph& d);

}  // namespace wog
