#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wog/deciders.hpp"

namespace wog {

struct FuzzConfig {
    int n_min = 4;
    int n_max = 9;
    double arc_probability = 0.35;
    double heavy_probability = 0.4;
    std::vector<int> forbidden_cycles;
    // Empty, a family tag (applicability predicate) or a catalog name.
    std::string family;
    std::uint64_t seed = 1;
    int count = 100;
    // Chance that a heavy vertex has all its arcs turned inward.
    double sink_bias = 0.0;
    // Chance of building from simplex, 4-cycle and 5-cycle blocks instead of G(n,p).
    double structured_probability = 0.0;
    // Chance of emitting a catalog graph when the family admits one.
    double special_probability = 0.0;
    int max_attempts = 20000;
};

class Generator {
public:
    explicit Generator(FuzzConfig cfg);
    // Throws GenerationError once max_attempts candidates in a row are rejected.
    Digraph next();

private:
    Digraph candidate();
    bool accept(const Digraph& d) const;
    Digraph orient(const std::vector<std::string>& names, const std::vector<Edge>& edges);
    Digraph random_graph();
    Digraph structured_graph();
    Digraph special_graph();
    std::vector<std::string> special_choices() const;

    FuzzConfig cfg_;
    std::mt19937_64 rng_;
};

std::vector<Digraph> gen_random(const FuzzConfig& cfg);

struct FuzzSummary {
    int instances = 0;
    int unmixed = 0;
    int mixed = 0;
    int disagreements = 0;
    int errors = 0;
    // family -> {applicable, unmixed, mixed}
    std::map<std::string, std::array<int, 3>> families;
    std::vector<std::string> failures;
};

// Generates sequentially, evaluates on `threads` workers, merges by index.
// Also checks that serialization round-trips byte for byte.
FuzzSummary run_fuzz(const FuzzConfig& cfg, unsigned threads = 0);

}  // namespace wog
