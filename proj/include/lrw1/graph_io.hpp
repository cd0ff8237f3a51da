#pragma once

#include <string>
#include <string_view>

#include "lrw1/graph.hpp"

namespace lrw1 {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list: optional `#` comment lines, a header line `n m`, then m lines
/// `u v` with 0 <= u, v < n and u != v. Duplicate edges are rejected.
/// graph6: standard encoding, optional `>>graph6<<` header.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Picks the format from the first significant byte: '>' or a byte in the
/// graph6 alphabet (63..126) means graph6; anything else is an edge list.
GraphFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);
/// Body only, no header and no trailing newline.
std::string to_graph6(const Graph& g);

std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace lrw1
