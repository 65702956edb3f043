#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wog/deciders.hpp"

namespace wog {

struct GraphDocument {
    Digraph graph;
    std::optional<std::string> name;
    std::optional<std::string> expected;  // "unmixed" or "mixed"
};

// Throws ParseError (syntax with line and column, or semantic).
GraphDocument parse_document(std::string_view text, bool normalize = true);
Digraph parse(std::string_view text);

// Sorted keys, sorted vertices and arcs, two-space indent, trailing newline.
std::string serialize(const GraphDocument& doc);
std::string serialize(const Digraph& d);

// "-" reads standard input.
std::string read_text(const std::string& path);

nlohmann::json to_json(const Digraph& d, VertexSet s);
nlohmann::json to_json(const Digraph& d, const StarSemiForest& h);
nlohmann::json to_json(const Digraph& d, const Certificate& c);
nlohmann::json to_json(const Digraph& d, const FamilyReport& r);
nlohmann::json to_json(const Digraph& d, const Verdict& v);
nlohmann::json to_json(const Digraph& d, const DispatchResult& r);

}  // namespace wog
