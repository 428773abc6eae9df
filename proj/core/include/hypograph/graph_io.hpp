#pragma once

#include <istream>
#include <string>
#include <vector>

#include "hypograph/graph.hpp"

namespace hypograph {

/// Graph JSON: {"n": <int>, "edges": [[u,v],...], "labels": [...]?} with
/// 0-based indices. The writer emits u < v pairs sorted; the reader accepts
/// either pair order.
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const std::string& text);

/// Reads graph6 lines (optional ">>graph6<<" header; one graph per line).
std::vector<SimpleGraph> read_graph6(std::istream& in);
SimpleGraph graph_from_graph6(const std::string& line);
std::string graph_to_graph6(const SimpleGraph& g);

/// Loads a graph file, sniffing JSON vs graph6 by content. Multi-graph
/// graph6 files yield their first graph.
SimpleGraph load_graph_file(const std::string& path);

/// DOT (undirected) with stable vertex and edge order and display labels.
std::string graph_to_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace hypograph
