#include "pqvol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pqvol {

namespace {

std::string edge_str(int i, int j) { return "{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("Graph: loop edge " + edge_str(i, j));
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("Graph: edge " + edge_str(i, j) + " outside vertex range 1.." +
                                  std::to_string(n));
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
  for (auto [i, j] : edges_) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

BipartiteGraph::BipartiteGraph(int p, int q, std::vector<std::pair<int, int>> edges)
    : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("BipartiteGraph: negative part size");
  for (auto [i, j] : edges) {
    if (i < 1 || i > p || j < 1 || j > q)
      throw std::invalid_argument("BipartiteGraph: edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside parts of size " +
                                  std::to_string(p) + "," + std::to_string(q));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool BipartiteGraph::has_edge(int i, int j) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> BipartiteGraph::adjacency_v1() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p_) + 1);
  for (auto [i, j] : edges_) adj[static_cast<std::size_t>(i)].push_back(j);
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Graph make_complete(int n) {
  if (n < 0) throw std::invalid_argument("make_complete: negative n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph make_empty(int n) {
  if (n < 0) throw std::invalid_argument("make_empty: negative n");
  return Graph(n, {});
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph make_wheel(int n) {
  if (n < 3) throw std::invalid_argument("make_wheel: need n >= 3, got " + std::to_string(n));
  return join({make_cycle(n), make_complete(1)});
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("make_complete_multipartite: no parts");
  std::vector<Graph> blocks;
  blocks.reserve(parts.size());
  for (int m : parts) {
    if (m < 1)
      throw std::invalid_argument("make_complete_multipartite: part size must be >= 1, got " +
                                  std::to_string(m));
    blocks.push_back(make_empty(m));
  }
  return join(blocks);
}

Graph join(const std::vector<Graph>& parts) {
  if (parts.empty()) throw std::invalid_argument("join: empty part list");
  int total = 0;
  std::vector<int> offset(parts.size());
  for (std::size_t b = 0; b < parts.size(); ++b) {
    offset[b] = total;
    total += parts[b].vertex_count();
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (auto [i, j] : parts[b].edges()) edges.emplace_back(i + offset[b], j + offset[b]);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (int i = 1; i <= parts[a].vertex_count(); ++i)
        for (int j = 1; j <= parts[b].vertex_count(); ++j)
          edges.emplace_back(i + offset[a], j + offset[b]);
  return Graph(total, std::move(edges));
}

BipartiteGraph bipartite_double(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) + 2 * g.edges().size());
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i);
  for (auto [i, j] : g.edges()) {
    edges.emplace_back(i, j);
    edges.emplace_back(j, i);
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph tilde(const BipartiteGraph& h) {
  const int p = h.part1_size(), q = h.part2_size();
  std::vector<std::pair<int, int>> edges = h.edges();
  for (int i = 1; i <= p; ++i) edges.emplace_back(i, q + 1);
  for (int j = 1; j <= q + 1; ++j) edges.emplace_back(p + 1, j);
  return BipartiteGraph(p + 1, q + 1, std::move(edges));
}

std::vector<int> neighborhood(const BipartiteGraph& h, const std::vector<int>& s) {
  std::vector<bool> in_s(static_cast<std::size_t>(h.part1_size()) + 1, false);
  for (int i : s) {
    if (i < 1 || i > h.part1_size())
      throw std::invalid_argument("neighborhood: index " + std::to_string(i) +
                                  " outside V1 of size " + std::to_string(h.part1_size()));
    in_s[static_cast<std::size_t>(i)] = true;
  }
  std::vector<bool> hit(static_cast<std::size_t>(h.part2_size()) + 1, false);
  for (auto [i, j] : h.edges())
    if (in_s[static_cast<std::size_t>(i)]) hit[static_cast<std::size_t>(j)] = true;
  std::vector<int> out;
  for (int j = 1; j <= h.part2_size(); ++j)
    if (hit[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

namespace {

bool connected_adjacency(const std::vector<std::vector<int>>& adj, int n) {
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

bool is_connected(const Graph& g) { return connected_adjacency(g.adjacency(), g.vertex_count()); }

bool is_connected(const BipartiteGraph& h) { return is_connected(to_graph(h)); }

Graph to_graph(const BipartiteGraph& h) {
  const int p = h.part1_size();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(h.edges().size());
  for (auto [i, j] : h.edges()) edges.emplace_back(i, p + j);
  return Graph(p + h.part2_size(), std::move(edges));
}

BipartiteGraph permute_v1(const BipartiteGraph& h, const std::vector<int>& perm) {
  const int p = h.part1_size();
  if (static_cast<int>(perm.size()) != p)
    throw std::invalid_argument("permute_v1: permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > p || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permute_v1: not a permutation of 1..p");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(h.edges().size());
  for (auto [i, j] : h.edges()) edges.emplace_back(perm[static_cast<std::size_t>(i) - 1], j);
  return BipartiteGraph(p, h.part2_size(), std::move(edges));
}

BipartiteGraph swap_sides(const BipartiteGraph& h) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(h.edges().size());
  for (auto [i, j] : h.edges()) edges.emplace_back(j, i);
  return BipartiteGraph(h.part2_size(), h.part1_size(), std::move(edges));
}

}  // namespace pqvol
