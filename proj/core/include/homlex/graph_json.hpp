#ifndef HOMLEX_GRAPH_JSON_HPP
#define HOMLEX_GRAPH_JSON_HPP

#include <string>
#include <string_view>

#include "homlex/graph.hpp"

namespace homlex {

// Wire format: {"n": int, "edges": [[u,v],...], "loops": [v,...]} with
// 0-based vertices and u < v. Emission is deterministic (sorted edges and
// loops, sorted object keys).

/// Throws ParseError on malformed JSON, out-of-range vertices, u >= v, or
/// duplicate entries.
Graph graph_from_json(std::string_view text);

std::string graph_to_json(const Graph& g, int indent = -1);

} // namespace homlex

#endif
