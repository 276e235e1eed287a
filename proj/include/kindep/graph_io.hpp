#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kindep/graph.hpp"

namespace kindep {

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix in column order, six bits per byte, each byte offset by 63.
// A trailing newline is tolerated; anything else malformed raises ParseError
// carrying the byte offset.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Plain edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Auto-detects graph6 versus edge-list text (edge lists contain whitespace
// on their first line).
Graph parse_graph_text(std::string_view text);

std::string to_dot(const Graph& g, const std::optional<std::map<Vertex, std::string>>& labels = std::nullopt);

}  // namespace kindep
