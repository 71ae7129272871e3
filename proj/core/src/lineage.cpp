#include "spring/lineage.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "spring/harness.hpp"

namespace spring::lineage {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    const std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(begin));
      break;
    }
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

double text_distance(std::string_view a, std::string_view b) {
  const auto la = split_lines(a);
  const auto lb = split_lines(b);
  const std::size_t longest = std::max(la.size(), lb.size());
  if (longest == 0) return 0.0;

  // Two-row dynamic program over line edits.
  std::vector<std::size_t> prev(lb.size() + 1);
  std::vector<std::size_t> cur(lb.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= la.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= lb.size(); ++j) {
      const std::size_t substitute = prev[j - 1] + (la[i - 1] == lb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[lb.size()]) / static_cast<double>(longest);
}

double LineageGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string format_weight(double w, const char* fmt) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, fmt, w);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

LineageGraph build_graph(std::vector<std::string> names, std::vector<std::string> texts) {
  if (names.size() != texts.size()) {
    throw std::invalid_argument("build_graph: names and texts differ in length");
  }
  // Canonical node order, independent of how the caller enumerated inputs.
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });

  LineageGraph g;
  std::vector<std::string> sorted_texts;
  for (std::size_t i : order) {
    g.nodes.push_back(std::move(names[i]));
    sorted_texts.push_back(std::move(texts[i]));
  }

  const std::size_t n = g.nodes.size();
  g.distances.assign(n, std::vector<double>(n, 0.0));
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = text_distance(sorted_texts[i], sorted_texts[j]);
      g.distances[i][j] = g.distances[j][i] = d;
      candidates.push_back({i, j, d});
    }
  }

  // Kruskal. Nodes are already in name order, so index order is name order.
  std::stable_sort(candidates.begin(), candidates.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.weight, a.from, a.to) < std::tie(b.weight, b.from, b.to);
  });
  DisjointSets sets(n);
  for (const auto& e : candidates) {
    if (g.edges.size() + 1 >= n) break;
    if (sets.unite(e.from, e.to)) g.edges.push_back(e);
  }
  return g;
}

LineageGraph lineage_graph(const std::filesystem::path& dir) {
  std::vector<std::string> names;
  std::vector<std::string> texts;
  for (const auto& tc : harness::discover(dir)) {
    names.push_back(tc.name);
    texts.push_back(harness::read_file(tc.input_path));
  }
  return build_graph(std::move(names), std::move(texts));
}

std::string to_dot(const LineageGraph& g) {
  std::string out = "graph lineage {\n";
  for (const auto& name : g.nodes) out += "  " + quoted(name) + ";\n";
  for (const auto& e : g.edges) {
    const std::string w = format_weight(e.weight, "%.3f");
    out += "  " + quoted(g.nodes[e.from]) + " -- " + quoted(g.nodes[e.to]) +
           " [label=\"" + w + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_matrix_csv(const LineageGraph& g) {
  std::string out = "name";
  for (const auto& name : g.nodes) out += "," + name;
  out += "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += g.nodes[i];
    for (double d : g.distances[i]) out += "," + format_weight(d, "%.6f");
    out += "\n";
  }
  return out;
}

}  // namespace spring::lineage
