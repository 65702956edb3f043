#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wog/generator.hpp"
#include "wog/io.hpp"

using namespace wog;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitConsistency = 5;

std::string set_text(const Digraph& d, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : d.names_of(s)) {
        out += (first ? "" : ", ") + n;
        first = false;
    }
    return out + "}";
}

int run_check(const std::string& path, bool as_json) {
    GraphDocument doc = parse_document(read_text(path));
    const Digraph& d = doc.graph;
    Verdict v = oracle_unmixed(d);
    if (as_json) {
        std::cout << to_json(d, v).dump(2) << "\n";
        return 0;
    }
    std::cout << to_string(v.status) << "\n";
    if (v.status == Status::unmixed) {
        std::cout << "every strong vertex cover has " << v.cardinality << " vertices (" << v.strong_count
                  << " strong covers)\n";
    } else {
        std::cout << "strong cover of size " << size_of(*v.smaller) << ": " << set_text(d, *v.smaller) << "\n";
        std::cout << "strong cover of size " << size_of(*v.larger) << ": " << set_text(d, *v.larger) << "\n";
    }
    if (v.l3_witness) {
        CoverAnalysis a = classify_cover(d, *v.l3_witness);
        std::cout << "strong cover with nonempty L3: " << set_text(d, a.cover) << ", L3 = " << set_text(d, a.l3)
                  << "\n";
    }
    if (doc.expected && *doc.expected != to_string(v.status)) {
        std::cerr << "document expects " << *doc.expected << "\n";
        return kExitConsistency;
    }
    return 0;
}

int run_decide(const std::string& path, const std::string& family, bool as_json) {
    const Digraph d = parse(read_text(path));
    if (family != "auto") {
        FamilyReport r = decide_family(d, family);
        if (as_json) std::cout << to_json(d, r).dump(2) << "\n";
        else std::cout << r.family << ": " << to_string(r.verdict) << " (" << r.certificate.note << ")\n";
        return 0;
    }
    DispatchResult res = dispatch(d);
    if (as_json) {
        std::cout << to_json(d, res).dump(2) << "\n";
        return 0;
    }
    for (const auto& r : res.reports) {
        std::cout << r.family << ": " << to_string(r.verdict);
        if (!r.certificate.note.empty()) std::cout << " (" << r.certificate.note << ")";
        std::cout << "\n";
    }
    if (res.oracle) std::cout << "oracle: " << to_string(res.oracle->status) << "\n";
    std::cout << "consensus: " << to_string(res.consensus) << "\n";
    return 0;
}

int run_classify(const std::string& path) {
    const Digraph d = parse(read_text(path));
    for (const auto& fam : family_names()) {
        std::cout << fam << ": ";
        try {
            std::cout << (family_applicable(d, fam) ? "yes" : "no") << "\n";
        } catch (const CapacityError& e) {
            std::cout << "skipped (" << e.what() << ")\n";
        }
    }
    return 0;
}

int run_witness(const std::string& path) {
    const Digraph d = parse(read_text(path));
    std::cout << to_json(d, dispatch(d)).dump(2) << "\n";
    return 0;
}

int run_catalog(const std::string& name) {
    if (name == "list") {
        for (const auto& e : catalog()) std::cout << e.name << "\n";
        return 0;
    }
    GraphDocument doc{catalog_digraph(name), name, std::nullopt};
    std::cout << serialize(doc);
    return 0;
}

int run_fuzz(FuzzConfig cfg, const std::string& range, unsigned threads) {
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            cfg.n_min = cfg.n_max = std::stoi(range);
        } else {
            cfg.n_min = std::stoi(range.substr(0, dots));
            cfg.n_max = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "error: --n expects N or A..B\n";
        return kExitUsage;
    }
    FuzzSummary s = wog::run_fuzz(cfg, threads);
    std::cout << "instances: " << s.instances << " unmixed: " << s.unmixed << " mixed: " << s.mixed
              << " disagreements: " << s.disagreements << " errors: " << s.errors << "\n";
    for (const auto& [fam, row] : s.families)
        std::cout << "  " << fam << ": applicable " << row[0] << ", unmixed " << row[1] << ", mixed " << row[2]
                  << "\n";
    for (const auto& f : s.failures) std::cerr << f << "\n";
    if (s.disagreements) return kExitConsistency;
    if (s.errors) return kExitOther;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unmixedness of edge ideals of weighted oriented graphs"};
    app.require_subcommand(1);

    std::string path = "-";
    bool as_json = false;
    auto* check = app.add_subcommand("check", "Oracle verdict from strong vertex covers");
    check->add_option("file", path, "Graph document, - for stdin")->required();
    check->add_flag("--json", as_json, "Machine-readable output");

    std::string family = "auto";
    auto* decide = app.add_subcommand("decide", "Run the family deciders");
    decide->add_option("file", path, "Graph document, - for stdin")->required();
    decide->add_option("--family", family, "auto or a family tag")
        ->check(CLI::IsMember([] {
            auto names = family_names();
            names.insert(names.begin(), "auto");
            return names;
        }()));
    decide->add_flag("--json", as_json, "Machine-readable output");

    auto* classify = app.add_subcommand("classify", "Print which families apply");
    classify->add_option("file", path, "Graph document, - for stdin")->required();

    auto* witness = app.add_subcommand("witness", "Certificates of every decider as JSON");
    witness->add_option("file", path, "Graph document, - for stdin")->required();

    std::string name;
    auto* cat = app.add_subcommand("catalog", "Emit a special graph as a document (or: list)");
    cat->add_option("name", name, "K1, C7, T10, P10, P13, P14, Q13 or list")->required();

    FuzzConfig cfg;
    std::string range = "6..9";
    std::string forbid;
    unsigned threads = 0;
    auto* fuzz = app.add_subcommand("fuzz", "Random instances cross-checked against the oracle");
    fuzz->add_option("--n", range, "Vertex count N or range A..B");
    fuzz->add_option("--count", cfg.count, "Number of instances");
    fuzz->add_option("--seed", cfg.seed, "Random seed");
    fuzz->add_option("--arc-p", cfg.arc_probability, "Edge probability");
    fuzz->add_option("--heavy-p", cfg.heavy_probability, "Probability of weight > 1");
    fuzz->add_option("--sink-bias", cfg.sink_bias, "Probability a heavy vertex becomes a sink");
    fuzz->add_option("--structured", cfg.structured_probability, "Probability of block-built graphs");
    fuzz->add_option("--special", cfg.special_probability, "Probability of catalog graphs");
    fuzz->add_option("--forbid", forbid, "Comma-separated forbidden cycle lengths");
    fuzz->add_option("--family", cfg.family, "Family tag or catalog name");
    fuzz->add_option("--threads", threads, "Worker threads (0: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*check) return run_check(path, as_json);
        if (*decide) return run_decide(path, family, as_json);
        if (*classify) return run_classify(path);
        if (*witness) return run_witness(path);
        if (*cat) return run_catalog(name);
        if (*fuzz) {
            std::stringstream ss(forbid);
            for (std::string tok; std::getline(ss, tok, ',');)
                if (!tok.empty()) cfg.forbidden_cycles.push_back(std::stoi(tok));
            return run_fuzz(cfg, range, threads);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
