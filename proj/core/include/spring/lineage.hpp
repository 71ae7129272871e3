#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace spring::lineage {

/// Splits on '\n'. A trailing newline does not start an extra line, and the
/// empty string has no lines.
std::vector<std::string_view> split_lines(std::string_view text);

/// Line-level Levenshtein distance (insert, delete, substitute all cost 1)
/// divided by the larger line count. Zero for two empty texts.
double text_distance(std::string_view a, std::string_view b);

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double weight = 0.0;
};

struct LineageGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<double>> distances;
  std::vector<Edge> edges;  // minimum spanning tree

  double total_weight() const;
};

/// Full pairwise distance matrix plus its minimum spanning tree. Equal
/// weights are ordered by the (lexicographic) names of the endpoints, so
/// the tree does not depend on the order the inputs arrive in.
LineageGraph build_graph(std::vector<std::string> names, std::vector<std::string> texts);

/// Builds the graph over every `*.json` input discovered in `dir`.
LineageGraph lineage_graph(const std::filesystem::path& dir);

/// Undirected DOT with one node per test and one labelled edge per tree edge.
std::string to_dot(const LineageGraph& graph);

/// Distance matrix as CSV, names in the header row and first column.
std::string to_matrix_csv(const LineageGraph& graph);

}  // namespace spring::lineage
