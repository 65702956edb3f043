#include "wog/generator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wog/io.hpp"

namespace wog {

namespace {

std::string vertex_name(int i) { return (i < 10 ? "v0" : "v") + std::to_string(i); }

bool creates_forbidden(const Graph& g, const std::vector<int>& forbidden) {
    return std::any_of(forbidden.begin(), forbidden.end(),
                       [&](int k) { return has_cycle_of_length(g, k); });
}

bool is_catalog_name(const std::string& s) {
    for (const auto& e : catalog())
        if (e.name == s) return true;
    return false;
}

}  // namespace

Generator::Generator(FuzzConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
    if (cfg_.n_min < 0 || cfg_.n_max < cfg_.n_min || cfg_.n_max > kMaxVertices)
        throw PreconditionError("invalid vertex count range");
    if (!cfg_.family.empty() && !is_catalog_name(cfg_.family)) {
        const auto& names = family_names();
        if (std::find(names.begin(), names.end(), cfg_.family) == names.end())
            throw LookupError("unknown family constraint '" + cfg_.family + "'");
    }
}

std::vector<std::string> Generator::special_choices() const {
    if (cfg_.family.empty()) return {"C7", "T10", "P10", "P13", "P14", "Q13"};
    if (is_catalog_name(cfg_.family)) return {cfg_.family};
    if (cfg_.family == "girth-ge-5") return {"C7", "P10", "P13", "P14", "Q13"};
    if (cfg_.family == "no-4-5-cycles") return {"C7", "T10"};
    if (cfg_.family == "girth-ge-6" || cfg_.family == "no-3-5-cycles") return {"C7"};
    return {};
}

Digraph Generator::orient(const std::vector<std::string>& names, const std::vector<Edge>& edges) {
    std::bernoulli_distribution flip(0.5), heavy(cfg_.heavy_probability), sink(cfg_.sink_bias);
    std::uniform_int_distribution<int> wdist(2, 3);
    const int n = static_cast<int>(names.size());
    std::vector<std::uint64_t> w(n, 1);
    for (int v = 0; v < n; ++v)
        if (heavy(rng_)) w[v] = wdist(rng_);
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) arcs.push_back(flip(rng_) ? Arc{u, v} : Arc{v, u});
    for (int v = 0; v < n; ++v)
        if (w[v] > 1 && sink(rng_))
            for (auto& a : arcs)
                if (a.first == v) a = {a.second, a.first};
    std::vector<Digraph::VertexSpec> vs;
    for (int v = 0; v < n; ++v) vs.push_back({names[v], w[v]});
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [u, v] : arcs) named.emplace_back(names[u], names[v]);
    return Digraph(vs, named);
}

Digraph Generator::random_graph() {
    std::uniform_int_distribution<int> ndist(cfg_.n_min, cfg_.n_max);
    const int n = ndist(rng_);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(vertex_name(i));
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng_);
    std::bernoulli_distribution take(cfg_.arc_probability);
    std::vector<Edge> edges;
    for (auto e : pairs) {
        if (!take(rng_)) continue;
        edges.push_back(e);
        if (!cfg_.forbidden_cycles.empty() && creates_forbidden(Graph(names, edges), cfg_.forbidden_cycles))
            edges.pop_back();
    }
    return orient(names, edges);
}

Digraph Generator::structured_graph() {
    std::uniform_int_distribution<int> ndist(cfg_.n_min, cfg_.n_max);
    const int n = std::max(1, ndist(rng_));
    std::vector<Edge> edges;
    std::vector<int> block_of;
    std::vector<int> connectors;
    int used = 0, blocks = 0;
    std::bernoulli_distribution want_cycle(0.35), want_square(0.25);
    while (used < n) {
        int left = n - used;
        if (left >= 4 && want_square(rng_)) {
            for (int i = 0; i < 4; ++i) {
                edges.emplace_back(used + i, used + (i + 1) % 4);
                block_of.push_back(blocks);
            }
            connectors.push_back(used);
            used += 4;
        } else if (left >= 5 && want_cycle(rng_)) {
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(used + i, used + (i + 1) % 5);
                block_of.push_back(blocks);
            }
            connectors.push_back(used);
            connectors.push_back(used + 2);
            used += 5;
        } else {
            int k = left == 1 ? 1 : std::uniform_int_distribution<int>(2, std::min(4, left))(rng_);
            for (int i = 0; i < k; ++i) {
                block_of.push_back(blocks);
                for (int j = i + 1; j < k; ++j) edges.emplace_back(used + i, used + j);
                if (i > 0) connectors.push_back(used + i);
            }
            used += k;
        }
        ++blocks;
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(vertex_name(i));
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < connectors.size(); ++i)
        for (std::size_t j = i + 1; j < connectors.size(); ++j)
            if (block_of[connectors[i]] != block_of[connectors[j]]) extra.emplace_back(connectors[i], connectors[j]);
    std::shuffle(extra.begin(), extra.end(), rng_);
    std::bernoulli_distribution take(cfg_.arc_probability * 0.5);
    for (auto e : extra) {
        if (!take(rng_)) continue;
        edges.push_back(e);
        if (!cfg_.forbidden_cycles.empty() && creates_forbidden(Graph(names, edges), cfg_.forbidden_cycles))
            edges.pop_back();
    }
    // Shuffle labels so that block structure does not follow name order.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return orient(names, edges);
}

Digraph Generator::special_graph() {
    auto choices = special_choices();
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    const Graph& g = catalog_entry(choices[pick(rng_)]).graph;
    return orient(g.names(), g.edges());
}

Digraph Generator::candidate() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (!special_choices().empty() && u(rng_) < cfg_.special_probability) return special_graph();
    if (is_catalog_name(cfg_.family)) return special_graph();
    if (u(rng_) < cfg_.structured_probability) return structured_graph();
    return random_graph();
}

bool Generator::accept(const Digraph& d) const {
    const Graph g = d.underlying();
    if (creates_forbidden(g, cfg_.forbidden_cycles)) return false;
    if (cfg_.family.empty()) return true;
    if (is_catalog_name(cfg_.family)) return identify_as(g, cfg_.family).has_value();
    try {
        return family_applicable(d, cfg_.family);
    } catch (const CapacityError&) {
        return false;
    }
}

Digraph Generator::next() {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
        Digraph d = candidate();
        if (accept(d)) return d;
    }
    throw GenerationError("no acceptable instance after " + std::to_string(cfg_.max_attempts) +
                          " attempts; loosen the constraints");
}

std::vector<Digraph> gen_random(const FuzzConfig& cfg) {
    Generator gen(cfg);
    std::vector<Digraph> out;
    for (int i = 0; i < cfg.count; ++i) out.push_back(gen.next());
    return out;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, unsigned threads) {
    std::vector<Digraph> graphs = gen_random(cfg);
    struct Outcome {
        std::optional<DispatchResult> result;
        std::string failure;
        bool disagreement = false;
    };
    std::vector<Outcome> outcomes(graphs.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t i = cursor++; i < graphs.size(); i = cursor++) {
            const Digraph& d = graphs[i];
            Outcome& o = outcomes[i];
            std::string text = serialize(d);
            try {
                Digraph back = parse(text);
                if (!(back == d) || serialize(back) != text) {
                    o.failure = "instance " + std::to_string(i) + ": serialization does not round-trip\n" + text;
                    continue;
                }
                o.result = dispatch(d);
            } catch (const DisagreementError& e) {
                o.disagreement = true;
                o.failure = "instance " + std::to_string(i) + ": " + e.what() + "\n" + text;
            } catch (const Error& e) {
                o.failure = "instance " + std::to_string(i) + ": " + e.what() + "\n" + text;
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, graphs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    FuzzSummary s;
    s.instances = static_cast<int>(graphs.size());
    for (const auto& o : outcomes) {
        if (!o.failure.empty()) {
            (o.disagreement ? s.disagreements : s.errors) += 1;
            s.failures.push_back(o.failure);
            continue;
        }
        if (o.result->consensus == Status::unmixed) ++s.unmixed;
        if (o.result->consensus == Status::mixed) ++s.mixed;
        for (const auto& r : o.result->reports) {
            auto& row = s.families[r.family];
            if (r.applicable) ++row[0];
            if (r.verdict == Status::unmixed) ++row[1];
            if (r.verdict == Status::mixed) ++row[2];
        }
    }
    return s;
}

}  // namespace wog
