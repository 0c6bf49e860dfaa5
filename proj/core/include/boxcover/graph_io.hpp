#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "boxcover/graph.hpp"

namespace boxcover {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// graph6 per the standard McKay encoding, bit-exact. An optional
// ">>graph6<<" prefix is tolerated on read.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// ".g6" extension selects graph6 (one graph on the first line);
// anything else is edge-list text.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const Graph& g, const std::filesystem::path& path);

}  // namespace boxcover
