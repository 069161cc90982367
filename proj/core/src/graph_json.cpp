#include "homlex/graph_json.hpp"

#include <json.hpp>

#include "homlex/errors.hpp"

namespace homlex {

using nlohmann::json;

Graph graph_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string{"bad graph JSON: "} + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("graph JSON needs an integer field \"n\"");
    const std::int64_t n = doc["n"].get<std::int64_t>();
    if (n < 0 || n > 100000) throw ParseError("vertex count out of range");
    Graph g(static_cast<int>(n));

    auto vertex = [&](const json& j) -> int {
        if (!j.is_number_integer()) throw ParseError("vertex must be an integer");
        const std::int64_t v = j.get<std::int64_t>();
        if (v < 0 || v >= n) throw ParseError("vertex out of range");
        return static_cast<int>(v);
    };

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair [u,v]");
            const int u = vertex(e[0]);
            const int v = vertex(e[1]);
            if (u >= v) throw ParseError("edges must satisfy u < v");
            if (g.has_edge(u, v)) throw ParseError("duplicate edge");
            g.add_edge(u, v);
        }
    }
    if (doc.contains("loops")) {
        if (!doc["loops"].is_array()) throw ParseError("\"loops\" must be an array");
        for (const auto& l : doc["loops"]) {
            const int v = vertex(l);
            if (g.has_loop(v)) throw ParseError("duplicate loop");
            g.add_loop(v);
        }
    }
    return g;
}

std::string graph_to_json(const Graph& g, int indent) {
    json doc;
    doc["n"] = g.order();
    doc["edges"] = json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back(json::array({u, v}));
    doc["loops"] = json::array();
    g.loops().for_each([&](int v) { doc["loops"].push_back(v); });
    return doc.dump(indent);
}

} // namespace homlex
