#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wog {

// Vertex sets are bitmasks over vertex indices. Indices follow the
// lexicographic order of vertex names, so the lowest bit is the smallest name.
using VertexSet = std::uint64_t;
using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class StructuralError : public Error { public: using Error::Error; };
class LookupError : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class CapacityError : public Error { public: using Error::Error; };
class ConsistencyError : public Error { public: using Error::Error; };
class GenerationError : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    enum class Kind { syntax, semantic };
    ParseError(Kind kind, const std::string& what, int line = 0, int column = 0)
        : Error(what), kind_(kind), line_(line), column_(column) {}
    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
private:
    Kind kind_;
    int line_;
    int column_;
};

constexpr VertexSet bit(int i) { return VertexSet{1} << i; }
constexpr bool has(VertexSet s, int i) { return (s >> i) & 1U; }
constexpr int size_of(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

template <class F>
void for_each_bit(VertexSet s, F&& f) {
    while (s) {
        f(lowest(s));
        s &= s - 1;
    }
}

std::vector<int> members(VertexSet s);

// Canonical order on vertex sets: by cardinality, then lexicographic on the
// sorted member lists.
bool canonical_less(VertexSet a, VertexSet b);

// Simple undirected graph with named vertices.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> names, const std::vector<Edge>& edges);

    int size() const { return static_cast<int>(names_.size()); }
    VertexSet all() const { return first_n(size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;
    VertexSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;

    VertexSet nbrs(int v) const { return adj_[v]; }
    VertexSet closed_nbrs(int v) const { return adj_[v] | bit(v); }
    VertexSet nbrs_of_set(VertexSet s) const;
    int degree(int v) const { return size_of(adj_[v]); }
    bool adjacent(int u, int v) const { return has(adj_[u], v); }
    bool is_clique(VertexSet s) const;
    bool is_stable(VertexSet s) const;
    std::vector<Edge> edges() const;
    int edge_count() const;

    Graph induced(VertexSet s) const;
    Graph complement() const;
    std::vector<VertexSet> connected_components() const;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
};

// Weighted oriented graph. Immutable once built.
class Digraph {
public:
    struct VertexSpec {
        std::string id;
        std::uint64_t weight = 1;
    };

    Digraph() = default;
    // Vertices may come in any order; they are stored sorted by id.
    // Throws StructuralError on self-loops, repeated or antiparallel arcs,
    // duplicate ids or zero weights, and LookupError on unknown endpoints.
    Digraph(std::vector<VertexSpec> vertices,
            const std::vector<std::pair<std::string, std::string>>& arcs,
            bool normalize_sources = true);

    int size() const { return static_cast<int>(names_.size()); }
    VertexSet all() const { return first_n(size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;
    VertexSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;

    std::uint64_t weight(int v) const { return weight_[v]; }
    bool heavy(int v) const { return weight_[v] > 1; }
    VertexSet v_plus() const { return v_plus_; }

    VertexSet out_nbrs(int v) const { return out_[v]; }
    VertexSet in_nbrs(int v) const { return in_[v]; }
    VertexSet nbrs(int v) const { return out_[v] | in_[v]; }
    VertexSet closed_nbrs(int v) const { return nbrs(v) | bit(v); }
    VertexSet nbrs_of_set(VertexSet s) const;
    VertexSet out_nbrs_of_set(VertexSet s) const;
    int degree(int v) const { return size_of(nbrs(v)); }
    bool is_sink(int v) const { return out_[v] == 0; }
    bool is_source(int v) const { return in_[v] == 0; }
    bool has_arc(int u, int v) const { return has(out_[u], v); }
    bool adjacent(int u, int v) const { return has(nbrs(u), v); }

    // Name-checked variants of the neighbourhood queries.
    VertexSet out_nbrs(std::string_view v) const { return out_nbrs(index(v)); }
    VertexSet in_nbrs(std::string_view v) const { return in_nbrs(index(v)); }
    VertexSet nbrs(std::string_view v) const { return nbrs(index(v)); }
    VertexSet closed_nbrs(std::string_view v) const { return closed_nbrs(index(v)); }

    std::vector<Arc> arcs() const;
    std::vector<VertexSpec> vertex_specs() const;
    std::vector<std::pair<std::string, std::string>> named_arcs() const;

    bool is_normalized() const;
    Digraph normalized() const;
    // Weights carry over verbatim; no renormalization.
    Digraph induced(VertexSet s) const;
    Graph underlying() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    void check_index(int v) const;

    std::vector<std::string> names_;
    std::vector<std::uint64_t> weight_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    VertexSet v_plus_ = 0;
};

Digraph normalize(const Digraph& d);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);
// Chordless cycles of length 3..max_len, each listed once, starting at its
// smallest vertex and oriented so that the second vertex is below the last.
std::vector<std::vector<int>> induced_cycles(const Graph& g, int max_len);
// Any cycle (not necessarily induced) of exactly k vertices.
bool has_cycle_of_length(const Graph& g, int k);

}  // namespace wog
