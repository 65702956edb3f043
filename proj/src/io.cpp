#include "wog/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace wog {

using nlohmann::json;

namespace {

ParseError semantic(const std::string& what) { return ParseError(ParseError::Kind::semantic, what); }

ParseError syntax_at(std::string_view text, std::size_t byte, const std::string& what) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    // nlohmann reports the offset one past the offending character.
    if (col > 1) --col;
    return ParseError(ParseError::Kind::syntax,
                      "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what,
                      line, col);
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [k, v] : obj.items())
        if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end())
            throw semantic("unexpected key '" + k + "' in " + where);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw semantic(std::string("missing '") + key + "' in " + where);
    return *it;
}

}  // namespace

GraphDocument parse_document(std::string_view text, bool normalize) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw syntax_at(text, e.byte, pos == std::string::npos ? what : what.substr(pos));
    }
    if (!doc.is_object()) throw semantic("document must be an object");
    only_keys(doc, {"version", "name", "expected", "vertices", "arcs"}, "document");
    const json& version = field(doc, "version", "document");
    if (!version.is_string() || version.get<std::string>() != "1")
        throw semantic("version must be the string \"1\"");

    GraphDocument out;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw semantic("name must be a string");
        out.name = it->get<std::string>();
    }
    if (auto it = doc.find("expected"); it != doc.end()) {
        if (!it->is_string()) throw semantic("expected must be a string");
        std::string e = it->get<std::string>();
        if (e != "unmixed" && e != "mixed") throw semantic("expected must be \"unmixed\" or \"mixed\"");
        out.expected = e;
    }

    const json& vs = field(doc, "vertices", "document");
    if (!vs.is_array()) throw semantic("vertices must be an array");
    std::vector<Digraph::VertexSpec> specs;
    for (const auto& v : vs) {
        if (!v.is_object()) throw semantic("vertex entries must be objects");
        only_keys(v, {"id", "weight"}, "vertex");
        const json& id = field(v, "id", "vertex");
        if (!id.is_string() || id.get<std::string>().empty())
            throw semantic("vertex id must be a nonempty string");
        std::uint64_t w = 1;
        if (auto it = v.find("weight"); it != v.end()) {
            if (!it->is_number_integer()) throw semantic("weight of '" + id.get<std::string>() + "' must be an integer");
            if (it->is_number_unsigned()) w = it->get<std::uint64_t>();
            else if (it->get<std::int64_t>() < 1) w = 0;
            else w = static_cast<std::uint64_t>(it->get<std::int64_t>());
            if (w < 1) throw semantic("weight of '" + id.get<std::string>() + "' is below 1");
        }
        specs.push_back({id.get<std::string>(), w});
    }

    const json& as = field(doc, "arcs", "document");
    if (!as.is_array()) throw semantic("arcs must be an array");
    std::vector<std::pair<std::string, std::string>> arcs;
    for (const auto& a : as) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
            throw semantic("each arc must be a pair of vertex ids");
        arcs.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    try {
        out.graph = Digraph(std::move(specs), arcs, normalize);
    } catch (const StructuralError& e) {
        throw semantic(e.what());
    } catch (const LookupError& e) {
        throw semantic(std::string("arc endpoint: ") + e.what());
    }
    return out;
}

Digraph parse(std::string_view text) { return parse_document(text).graph; }

std::string serialize(const GraphDocument& doc) {
    const Digraph& d = doc.graph;
    json out = json::object();
    out["version"] = "1";
    if (doc.name) out["name"] = *doc.name;
    if (doc.expected) out["expected"] = *doc.expected;
    json vs = json::array();
    for (const auto& v : d.vertex_specs()) vs.push_back({{"id", v.id}, {"weight", v.weight}});
    out["vertices"] = vs;
    auto arcs = d.named_arcs();
    std::sort(arcs.begin(), arcs.end());
    json as = json::array();
    for (const auto& [t, h] : arcs) as.push_back(json::array({t, h}));
    out["arcs"] = as;
    return out.dump(2) + "\n";
}

std::string serialize(const Digraph& d) { return serialize(GraphDocument{d, std::nullopt, std::nullopt}); }

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LookupError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json to_json(const Digraph& d, VertexSet s) { return d.names_of(s); }

namespace {

json arcs_json(const Digraph& d, const std::vector<Arc>& arcs) {
    json out = json::array();
    for (auto [u, v] : arcs) out.push_back(json::array({d.name(u), d.name(v)}));
    return out;
}

json cycle_json(const Digraph& d, const std::vector<int>& c) {
    json out = json::array();
    for (int v : c) out.push_back(d.name(v));
    return out;
}

json edges_json(const Digraph& d, const std::vector<Edge>& m) {
    json out = json::array();
    for (auto [u, v] : m) out.push_back(json::array({d.name(u), d.name(v)}));
    return out;
}

}  // namespace

json to_json(const Digraph& d, const StarSemiForest& h) {
    json out;
    json rots = json::array();
    for (const auto& t : h.rots) {
        json r = {{"parent", d.name(t.parent)}, {"vertices", to_json(d, t.vertices)},
                  {"arcs", arcs_json(d, t.arcs)}};
        if (auto it = h.witness.find(t.parent); it != h.witness.end()) r["witness"] = d.name(it->second);
        rots.push_back(r);
    }
    json unis = json::array();
    for (const auto& b : h.unicycles)
        unis.push_back({{"cycle", cycle_json(d, b.cycle)}, {"vertices", to_json(d, b.vertices)},
                        {"arcs", arcs_json(d, b.arcs)}});
    out["rots"] = rots;
    out["unicycles"] = unis;
    out["w1"] = to_json(d, h.w1);
    out["w2"] = to_json(d, h.w2);
    return out;
}

json to_json(const Digraph& d, const Certificate& c) {
    json out = json::object();
    if (!c.note.empty()) out["note"] = c.note;
    if (c.clique) out["clique"] = to_json(d, *c.clique);
    if (c.forest) out["forest"] = to_json(d, *c.forest);
    if (c.decomposition) {
        json dec;
        json simp = json::array();
        for (VertexSet s : c.decomposition->simplexes) simp.push_back(to_json(d, s));
        json cyc = json::array();
        for (const auto& cy : c.decomposition->cycles) cyc.push_back(cycle_json(d, cy));
        dec["simplexes"] = simp;
        dec["cycles"] = cyc;
        dec["matching"] = edges_json(d, c.decomposition->matching);
        out["decomposition"] = dec;
    }
    if (c.reduction) {
        json r = json::array();
        for (VertexSet s : c.reduction->cliques) r.push_back(to_json(d, s));
        out["reduction"] = r;
    }
    if (c.special) out["special"] = {{"name", c.special->name}, {"bijection", c.special->bijection}};
    if (c.matching) out["matching"] = edges_json(d, *c.matching);
    if (c.cycle) out["cycle"] = cycle_json(d, *c.cycle);
    if (c.arc) out["arc"] = json::array({d.name(c.arc->first), d.name(c.arc->second)});
    if (c.component) out["component"] = to_json(d, *c.component);
    if (!c.components.empty()) {
        json parts = json::array();
        for (const auto& p : c.components) parts.push_back(to_json(d, p));
        out["components"] = parts;
    }
    return out;
}

json to_json(const Digraph& d, const FamilyReport& r) {
    return {{"family", r.family}, {"applicable", r.applicable}, {"verdict", to_string(r.verdict)},
            {"certificate", to_json(d, r.certificate)}};
}

json to_json(const Digraph& d, const Verdict& v) {
    json out = {{"verdict", to_string(v.status)}};
    if (v.status == Status::unmixed) {
        out["cardinality"] = v.cardinality;
        out["strong_covers"] = v.strong_count;
    }
    if (v.smaller) out["smaller"] = to_json(d, *v.smaller);
    if (v.larger) out["larger"] = to_json(d, *v.larger);
    if (v.l3_witness) {
        CoverAnalysis a = classify_cover(d, *v.l3_witness);
        out["l3_witness"] = {{"cover", to_json(d, a.cover)}, {"l3", to_json(d, a.l3)}};
    }
    json sizes = json::object();
    for (auto [k, n] : v.sizes) sizes[std::to_string(k)] = n;
    out["sizes"] = sizes;
    return out;
}

json to_json(const Digraph& d, const DispatchResult& r) {
    json reports = json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(d, rep));
    json out = {{"consensus", to_string(r.consensus)}, {"reports", reports}};
    if (r.oracle) out["oracle"] = to_json(d, *r.oracle);
    return out;
}

}  // namespace wog
