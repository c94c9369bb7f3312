#pragma once

#include <filesystem>
#include <optional>

#include "gspf/graph.hpp"

namespace gspf {

/// Reads an `i,j,weight` edge list (header row required). An edge may be
/// listed once or in both directions; both directions must then agree.
/// Node count is max index + 1 unless `node_count` is given.
Graph read_edge_list(const std::filesystem::path& path,
                     std::optional<Index> node_count = std::nullopt);

/// Reads `node,x,y` coordinates (header row required, nodes 0..n-1 each once).
Matrix read_node_coords(const std::filesystem::path& path);

void write_edge_list(const Graph& graph, const std::filesystem::path& path);
void write_node_coords(const Matrix& coords, const std::filesystem::path& path);

/// Edge list plus the optional coordinates file, as one Graph.
Graph load_graph(const std::filesystem::path& edges,
                 const std::optional<std::filesystem::path>& coords = std::nullopt);

}  // namespace gspf
