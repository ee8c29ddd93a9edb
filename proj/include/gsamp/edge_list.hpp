#pragma once

#include "gsamp/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace gsamp {

/// Edge-list CSV, one undirected edge per line: `src,dst,weight` with 0-based
/// vertex indices. Lines starting with '#' are comments; a `# vertices=N`
/// comment fixes the vertex count (otherwise max index + 1).
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

void write_edge_list(const Graph& graph, std::ostream& out);
void save_edge_list(const Graph& graph, const std::filesystem::path& path);

/// Coordinates sidecar CSV `vertex,x,y`. Every vertex must appear exactly once.
Eigen::MatrixXd read_coordinates(std::istream& in, std::size_t vertex_count);
Eigen::MatrixXd load_coordinates(const std::filesystem::path& path, std::size_t vertex_count);
void save_coordinates(const Eigen::MatrixXd& coordinates, const std::filesystem::path& path);

}  // namespace gsamp
